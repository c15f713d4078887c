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

#include "symsmt/solver.hpp"

#include <stdexcept>

#include "symsmt/errors.hpp"
#include "symsmt/frontend.hpp"
#include "symsmt/oracle.hpp"

namespace symsmt {

std::string_view to_string(SolveMode mode) {
  switch (mode) {
    case SolveMode::Plain: return "plain";
    case SolveMode::Sym: return "sym";
    case SolveMode::Hybrid: return "hybrid";
  }
  return "?";
}

std::string_view to_string(HybridOrder order) {
  return order == HybridOrder::SymFirst ? "sym-first" : "plain-first";
}

std::string_view to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::Sat: return "sat";
    case SolveStatus::UnsatBounded: return "unsat(bounded)";
    case SolveStatus::Unknown: return "unknown";
  }
  return "?";
}

Millis SolveConfig::resolved_hybrid_budget() const {
  if (hybrid_budget) return *hybrid_budget;
  if (timeout) return *timeout / 4;
  return Millis(1000);
}

void SolveConfig::validate() const {
  if (bound.value < 1) throw std::invalid_argument("domain bound must be at least 1");
  if (k < 1) throw std::invalid_argument("truncation k must be at least 1");
  if (mode == SolveMode::Hybrid && timeout && resolved_hybrid_budget() >= *timeout)
    throw std::invalid_argument("hybrid budget must be smaller than the timeout");
}

namespace {

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Deadline deadline_for(const SolveConfig& config) {
  return config.timeout ? Deadline::after(*config.timeout) : Deadline::never();
}

struct Prepared {
  Script script;
  Skeleton skeleton;
  Cnf cnf;
};

Prepared prepare(const Script& script, SolveStats& stats) {
  Prepared p{normalize(script), {}, {}};
  p.skeleton = extract_skeleton(p.script);
  p.cnf = to_cnf(p.skeleton.psi, p.skeleton.phi.size());
  stats.skeleton_vars = p.cnf.num_skeleton_vars;
  stats.skeleton_clauses = p.cnf.clauses.size();
  stats.tseitin_aux_vars = p.cnf.num_aux();
  return p;
}

void finish_model(const Script& script, SolveResult& result) {
  for (const auto& name : script.int_variables()) result.model.values.try_emplace(name, 0);
  if (!evaluate(script.assertion, result.model.values))
    throw std::logic_error("theory model does not satisfy the assertion");
}

void lazy_loop(const Script& original, const Prepared& prepared, Cnf cnf, const SolveConfig& config,
               const Deadline& deadline, const std::vector<Clause>& carried, SolveResult& result) {
  SolveStats& stats = result.stats;
  SatSolver solver(cnf, config.sat);
  for (const auto& c : carried) solver.add_clause(c);
  const int n = prepared.cnf.num_skeleton_vars;
  std::vector<int> all_vars(n);
  for (int v = 0; v < n; ++v) all_vars[v] = v;
  TheoryOptions theory_options{config.shrink_core};

  while (true) {
    auto t0 = Clock::now();
    SatResult sat = solver.solve(deadline);
    stats.sat_seconds += seconds_since(t0);
    stats.sat.decisions += sat.stats.decisions;
    stats.sat.conflicts += sat.stats.conflicts;
    stats.sat.propagations += sat.stats.propagations;
    if (sat.outcome == SatOutcome::Cancelled) {
      result.status = SolveStatus::Unknown;
      result.reason = "timeout";
      return;
    }
    if (sat.outcome == SatOutcome::Unsat) {
      result.status = SolveStatus::UnsatBounded;
      return;
    }
    ++stats.skeleton_models_tried;
    std::vector<bool> x(sat.model.begin(), sat.model.begin() + n);
    std::vector<Atom> literals = assignment_to_literal_conjunction(x, prepared.skeleton.phi);
    t0 = Clock::now();
    ConsistencyResult check = check_consistency(literals, config.bound, deadline, theory_options);
    stats.theory_seconds += seconds_since(t0);
    stats.theory_nodes += check.nodes;
    if (check.outcome == Consistency::Cancelled) {
      result.status = SolveStatus::Unknown;
      result.reason = "timeout";
      return;
    }
    if (check.outcome == Consistency::Consistent) {
      result.status = SolveStatus::Sat;
      result.model = std::move(check.model);
      finish_model(original, result);
      return;
    }
    Clause blocking = conflict_clause(x, check.core);
    ++stats.conflict_clauses;
    result.conflict_clauses.push_back(blocking);
    solver.add_clause(std::move(blocking));
  }
}

SolveResult run_plain(const Script& script, const SolveConfig& config, const Deadline& deadline,
                      const std::vector<Clause>& carried = {}) {
  const auto start = Clock::now();
  SolveResult result;
  try {
    Prepared p = prepare(script, result.stats);
    lazy_loop(script, p, p.cnf, config, deadline, carried, result);
  } catch (const EvaluationOverflow& e) {
    result.status = SolveStatus::Unknown;
    result.reason = e.what();
  }
  result.stats.total_seconds = seconds_since(start);
  return result;
}

SolveResult run_sym(const Script& script, const SolveConfig& config, const Deadline& deadline,
                    const std::vector<Clause>& carried = {}) {
  const auto start = Clock::now();
  SolveResult result;
  SolveStats& stats = result.stats;
  try {
    BreakingSkeleton b = build_breaking_skeleton(script, config, deadline);
    stats.skeleton_vars = b.base.num_skeleton_vars;
    stats.skeleton_clauses = b.base.clauses.size();
    stats.tseitin_aux_vars = b.base.num_aux();
    stats.detect_seconds = b.detect_seconds;
    stats.symmetries_found = b.report.found;
    stats.symmetries_accepted = b.report.accepted.size();
    stats.symmetries_rejected = b.report.rejected;
    stats.detection_complete = b.report.complete;
    stats.symmetries_used = b.used;
    stats.sbp_clauses = b.sbp_clauses.size();
    stats.sbp_aux_vars = b.sbp_aux_vars;
    result.symmetries = b.report.accepted;
    result.sbp_clauses = b.sbp_clauses;
    if (deadline.expired()) {
      result.status = SolveStatus::Unknown;
      result.reason = "timeout";
      stats.total_seconds = seconds_since(start);
      return result;
    }
    Prepared p{std::move(b.script), std::move(b.skeleton), std::move(b.base)};
    lazy_loop(script, p, std::move(b.cnf), config, deadline, carried, result);
  } catch (const EvaluationOverflow& e) {
    result.status = SolveStatus::Unknown;
    result.reason = e.what();
  }
  stats.total_seconds = seconds_since(start);
  return result;
}

}  // namespace

BreakingSkeleton build_breaking_skeleton(const Script& script, const SolveConfig& config, const Deadline& deadline) {
  BreakingSkeleton b;
  SolveStats unused;
  Prepared p = prepare(script, unused);
  b.script = std::move(p.script);
  b.skeleton = std::move(p.skeleton);
  b.base = std::move(p.cnf);

  SymmetryOptions so;
  so.generator_limit = config.generator_limit;
  so.node_budget = config.node_budget;
  so.deadline = deadline;
  auto t0 = Clock::now();
  b.report = detect_symmetries(b.script, b.skeleton, so);
  b.detect_seconds = seconds_since(t0);

  b.cnf = b.base;
  b.ordering = order_variables(b.base, config.ordering);
  for (const auto& theta : b.report.accepted) {
    if (theta.skeleton_map.empty()) continue;
    ++b.used;
    SbpClauses sbp = build_restricted_sbp(theta, b.ordering, config.k, [&] { return b.cnf.new_var(); });
    b.sbp_aux_vars += sbp.aux_vars.size();
    for (auto& c : sbp.clauses) {
      b.sbp_clauses.push_back(c);
      b.cnf.add_clause(std::move(c));
    }
  }
  return b;
}

SolveResult solve_plain(const Script& script, const SolveConfig& config) {
  config.validate();
  return run_plain(script, config, deadline_for(config));
}

SolveResult solve_sym(const Script& script, const SolveConfig& config) {
  config.validate();
  return run_sym(script, config, deadline_for(config));
}

SolveResult solve_hybrid(const Script& script, const SolveConfig& config) {
  config.validate();
  const auto start = Clock::now();
  const Deadline total = deadline_for(config);
  const Deadline phase_one = Deadline::earliest(total, Deadline::after(config.resolved_hybrid_budget()));
  const bool sym_first = config.hybrid_order == HybridOrder::SymFirst;

  auto run = [&](bool sym, const Deadline& d, const std::vector<Clause>& carried) {
    return sym ? run_sym(script, config, d, carried) : run_plain(script, config, d, carried);
  };
  auto record = [](const SolveResult& r, bool sym) {
    return PhaseRecord{sym ? SolveMode::Sym : SolveMode::Plain, r.status, r.stats.total_seconds,
                       r.stats.skeleton_models_tried};
  };

  SolveResult first = run(sym_first, phase_one, {});
  std::vector<PhaseRecord> phases{record(first, sym_first)};
  SolveResult result;
  if (first.status != SolveStatus::Unknown || total.expired()) {
    result = std::move(first);
  } else {
    std::vector<Clause> carried;
    if (config.carry_conflicts) carried = first.conflict_clauses;
    result = run(!sym_first, total, carried);
    phases.push_back(record(result, !sym_first));
  }
  result.stats.phases = std::move(phases);
  result.stats.total_seconds = seconds_since(start);
  return result;
}

SolveResult solve(const Script& script, const SolveConfig& config) {
  switch (config.mode) {
    case SolveMode::Plain: return solve_plain(script, config);
    case SolveMode::Sym: return solve_sym(script, config);
    case SolveMode::Hybrid: return solve_hybrid(script, config);
  }
  return {};
}

}  // namespace symsmt
