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

#ifndef SYMSMT_SOLVER_HPP
#define SYMSMT_SOLVER_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symsmt/ast.hpp"
#include "symsmt/sat.hpp"
#include "symsmt/sbp.hpp"
#include "symsmt/symgraph.hpp"
#include "symsmt/theory.hpp"

namespace symsmt {

enum class SolveMode { Plain, Sym, Hybrid };
enum class HybridOrder { SymFirst, PlainFirst };

std::string_view to_string(SolveMode mode);
std::string_view to_string(HybridOrder order);

using Millis = std::chrono::milliseconds;

struct SolveConfig {
  SolveMode mode = SolveMode::Plain;
  DomainBound bound;
  /// SBP truncation: at most k support variables per generator.
  int k = 16;
  OrderingMode ordering = OrderingMode::Heuristic;
  std::size_t generator_limit = 8;
  std::uint64_t node_budget = 1000000;
  /// Phase-one budget t of the hybrid; defaults to a quarter of the timeout.
  std::optional<Millis> hybrid_budget;
  HybridOrder hybrid_order = HybridOrder::SymFirst;
  /// Carry phase-one conflict clauses into phase two of the hybrid.
  bool carry_conflicts = false;
  std::optional<Millis> timeout;
  bool shrink_core = false;
  SatOptions sat;

  /// Phase-one budget after defaults are applied.
  Millis resolved_hybrid_budget() const;
  /// Throws std::invalid_argument on inconsistent settings.
  void validate() const;
};

enum class SolveStatus { Sat, UnsatBounded, Unknown };

std::string_view to_string(SolveStatus status);

struct PhaseRecord {
  SolveMode mode;
  SolveStatus status;
  double seconds = 0;
  std::uint64_t skeleton_models_tried = 0;
};

struct SolveStats {
  int skeleton_vars = 0;
  std::size_t skeleton_clauses = 0;
  int tseitin_aux_vars = 0;
  std::uint64_t skeleton_models_tried = 0;
  std::uint64_t conflict_clauses = 0;
  std::size_t symmetries_found = 0;
  std::size_t symmetries_accepted = 0;
  std::size_t symmetries_rejected = 0;
  /// Accepted permutations with nonempty skeleton support (each yields one SBP).
  std::size_t symmetries_used = 0;
  bool detection_complete = true;
  std::size_t sbp_clauses = 0;
  std::size_t sbp_aux_vars = 0;
  SatStats sat;
  std::uint64_t theory_nodes = 0;
  double detect_seconds = 0;
  double sat_seconds = 0;
  double theory_seconds = 0;
  double total_seconds = 0;
  /// Hybrid only: each phase that ran, in order.
  std::vector<PhaseRecord> phases;
};

struct SolveResult {
  SolveStatus status = SolveStatus::Unknown;
  /// Complete: every declared Int variable has a value. Sat only.
  TheoryModel model;
  std::string reason;
  SolveStats stats;
  std::vector<Permutation> symmetries;
  std::vector<Clause> sbp_clauses;
  /// Conflict clauses added by the lazy loop, in order.
  std::vector<Clause> conflict_clauses;
};

/// The skeleton CNF of a script before and after restricted SBPs are added
/// for every accepted symmetry with skeleton support.
struct BreakingSkeleton {
  Script script;  // normalized
  Skeleton skeleton;
  Cnf base;
  Cnf cnf;
  VariableOrdering ordering;
  SymmetryReport report;
  std::vector<Clause> sbp_clauses;
  std::size_t sbp_aux_vars = 0;
  std::size_t used = 0;
  double detect_seconds = 0;
};

BreakingSkeleton build_breaking_skeleton(const Script& script, const SolveConfig& config,
                                         const Deadline& deadline = Deadline::never());

/// Lazy loop: SAT-solve the skeleton, check the literal conjunction in the
/// theory, block inconsistent assignments, repeat.
SolveResult solve_plain(const Script& script, const SolveConfig& config);

/// As solve_plain, after conjoining one restricted SBP per verified
/// generator (with skeleton support) to the skeleton CNF. Detection time
/// counts against the timeout.
SolveResult solve_sym(const Script& script, const SolveConfig& config);

/// Runs the hybrid_order-first mode for the phase-one budget, then the other
/// mode from scratch with whatever time remains.
SolveResult solve_hybrid(const Script& script, const SolveConfig& config);

/// Dispatches on config.mode.
SolveResult solve(const Script& script, const SolveConfig& config);

}  // namespace symsmt

#endif  // SYMSMT_SOLVER_HPP
