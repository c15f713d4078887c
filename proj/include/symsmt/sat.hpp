// Copyright 2026 The symsmt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SYMSMT_SAT_HPP
#define SYMSMT_SAT_HPP

#include <cstdint>
#include <vector>

#include "symsmt/deadline.hpp"
#include "symsmt/skeleton.hpp"

namespace symsmt {

struct SatStats {
  std::uint64_t decisions = 0;
  std::uint64_t conflicts = 0;
  std::uint64_t propagations = 0;
};

enum class SatOutcome { Sat, Unsat, Cancelled };

struct SatResult {
  SatOutcome outcome = SatOutcome::Cancelled;
  /// Total assignment (auxiliaries included) when outcome is Sat.
  std::vector<bool> model;
  SatStats stats;
};

enum class RestartPolicy { None, Luby };

struct SatOptions {
  RestartPolicy restarts = RestartPolicy::None;
  int luby_unit = 100;
  double activity_decay = 0.95;
};

/// CDCL solver: two watched literals, first-UIP learning, VSIDS activities,
/// decisions branch on false first. Clauses can be added between solve calls.
/// A solver is not thread-safe; independent solvers may run concurrently.
class SatSolver {
 public:
  explicit SatSolver(const Cnf& cnf, SatOptions options = {});

  int num_vars() const { return static_cast<int>(assigns_.size()); }

  /// Permanently adds a clause. An empty clause makes the solver Unsat.
  void add_clause(Clause clause);

  SatResult solve(const Deadline& deadline = Deadline::never());

  /// True once the clause set is known to be unsatisfiable.
  bool inconsistent() const { return !ok_; }

  /// Cumulative statistics across all solve calls.
  const SatStats& stats() const { return stats_; }

 private:
  static constexpr std::uint32_t kNoReason = UINT32_MAX;

  struct Watcher {
    std::uint32_t cref;
    Lit blocker;
  };

  // 1 true, -1 false, 0 unassigned
  int value(Lit l) const {
    int v = assigns_[l.var()];
    return l.negative() ? -v : v;
  }
  int decision_level() const { return static_cast<int>(trail_lim_.size()); }

  void attach(std::uint32_t cref);
  void enqueue(Lit l, std::uint32_t reason);
  std::uint32_t propagate();
  void analyze(std::uint32_t conflict, Clause& learnt, int& backtrack_level);
  void backtrack(int level);
  int pick_branch_var();
  void bump(int var);

  // Binary max-heap on activity; ties broken by smaller variable index.
  bool heap_less(int a, int b) const {
    return activity_[a] > activity_[b] || (activity_[a] == activity_[b] && a < b);
  }
  void heap_insert(int var);
  void heap_up(std::size_t i);
  void heap_down(std::size_t i);
  int heap_pop();

  SatOptions options_;
  bool ok_ = true;
  std::vector<Clause> clauses_;
  std::vector<std::vector<Watcher>> watches_;
  std::vector<int> assigns_;
  std::vector<int> level_;
  std::vector<std::uint32_t> reason_;
  std::vector<Lit> trail_;
  std::vector<std::size_t> trail_lim_;
  std::size_t qhead_ = 0;
  std::vector<double> activity_;
  double var_inc_ = 1.0;
  std::vector<int> heap_;
  std::vector<int> heap_pos_;
  std::vector<char> seen_;
  SatStats stats_;
};

}  // namespace symsmt

#endif  // SYMSMT_SAT_HPP
