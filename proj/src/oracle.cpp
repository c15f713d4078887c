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

#include "symsmt/oracle.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>
#include <unordered_map>

#include "symsmt/errors.hpp"
#include "symsmt/sat.hpp"

namespace symsmt {
namespace {

std::int64_t to_int64(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw EvaluationOverflow("constant " + v.str() + " exceeds 64 bits");
  return static_cast<std::int64_t>(v);
}

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw EvaluationOverflow("overflow while evaluating");
  return r;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw EvaluationOverflow("overflow while evaluating");
  return r;
}

// Flat, index-addressed copy of a formula for fast repeated evaluation.
class CompiledFormula {
 public:
  CompiledFormula(const Formula& f, const std::vector<std::string>& vars) {
    for (std::size_t i = 0; i < vars.size(); ++i) slots_[vars[i]] = static_cast<int>(i);
    root_ = compile(f);
  }

  bool eval(const std::vector<std::int64_t>& point) const { return eval_formula(root_, point); }

 private:
  enum class Op { Const, Var, Add, Sub, Neg, Mul, Lt, Le, Gt, Ge, Eq, Neq, And, Or, Not, Implies, True, False };
  struct Node {
    Op op;
    std::int64_t value = 0;
    std::vector<int> kids;
  };

  int push(Node n) {
    nodes_.push_back(std::move(n));
    return static_cast<int>(nodes_.size() - 1);
  }

  int compile(const Term& t) {
    Node n;
    switch (t.kind()) {
      case Term::Kind::IntConst: return push({Op::Const, to_int64(t.value()), {}});
      case Term::Kind::Var: return push({Op::Var, slots_.at(t.name()), {}});
      case Term::Kind::Add: n.op = Op::Add; break;
      case Term::Kind::Sub: n.op = Op::Sub; break;
      case Term::Kind::Neg: n.op = Op::Neg; break;
      case Term::Kind::Mul: n.op = Op::Mul; break;
    }
    for (const auto& a : t.args()) n.kids.push_back(compile(a));
    return push(std::move(n));
  }

  int compile(const Formula& f) {
    Node n;
    switch (f.kind()) {
      case Formula::Kind::Const: return push({f.value() ? Op::True : Op::False, 0, {}});
      case Formula::Kind::Atom: {
        static constexpr Op kRel[] = {Op::Lt, Op::Le, Op::Gt, Op::Ge, Op::Eq, Op::Neq};
        n.op = kRel[static_cast<int>(f.atom().relation)];
        n.kids = {compile(f.atom().lhs), compile(f.atom().rhs)};
        return push(std::move(n));
      }
      case Formula::Kind::And: n.op = Op::And; break;
      case Formula::Kind::Or: n.op = Op::Or; break;
      case Formula::Kind::Not: n.op = Op::Not; break;
      case Formula::Kind::Implies: n.op = Op::Implies; break;
    }
    for (const auto& a : f.args()) n.kids.push_back(compile(a));
    return push(std::move(n));
  }

  std::int64_t eval_term(int id, const std::vector<std::int64_t>& p) const {
    const Node& n = nodes_[id];
    switch (n.op) {
      case Op::Const: return n.value;
      case Op::Var: return p[n.value];
      case Op::Neg: return mul(-1, eval_term(n.kids[0], p));
      case Op::Sub: return add(eval_term(n.kids[0], p), mul(-1, eval_term(n.kids[1], p)));
      case Op::Add: {
        std::int64_t s = 0;
        for (int k : n.kids) s = add(s, eval_term(k, p));
        return s;
      }
      case Op::Mul: {
        std::int64_t s = 1;
        for (int k : n.kids) s = mul(s, eval_term(k, p));
        return s;
      }
      default: return 0;
    }
  }

  bool eval_formula(int id, const std::vector<std::int64_t>& p) const {
    const Node& n = nodes_[id];
    switch (n.op) {
      case Op::True: return true;
      case Op::False: return false;
      case Op::Lt: return eval_term(n.kids[0], p) < eval_term(n.kids[1], p);
      case Op::Le: return eval_term(n.kids[0], p) <= eval_term(n.kids[1], p);
      case Op::Gt: return eval_term(n.kids[0], p) > eval_term(n.kids[1], p);
      case Op::Ge: return eval_term(n.kids[0], p) >= eval_term(n.kids[1], p);
      case Op::Eq: return eval_term(n.kids[0], p) == eval_term(n.kids[1], p);
      case Op::Neq: return eval_term(n.kids[0], p) != eval_term(n.kids[1], p);
      case Op::Not: return !eval_formula(n.kids[0], p);
      case Op::Implies: return !eval_formula(n.kids[0], p) || eval_formula(n.kids[1], p);
      case Op::And:
        for (int k : n.kids)
          if (!eval_formula(k, p)) return false;
        return true;
      case Op::Or:
        for (int k : n.kids)
          if (eval_formula(k, p)) return true;
        return false;
      default: return false;
    }
  }

  std::unordered_map<std::string, int> slots_;
  std::vector<Node> nodes_;
  int root_ = 0;
};

}  // namespace

bool evaluate(const Formula& formula, const std::map<std::string, std::int64_t>& assignment) {
  std::vector<std::string> vars;
  collect_variables(formula, vars);
  std::vector<std::int64_t> point;
  for (const auto& v : vars) point.push_back(assignment.at(v));
  return CompiledFormula(formula, vars).eval(point);
}

BruteForceResult brute_force(const Script& script, DomainBound bound, BruteForceOptions options) {
  BruteForceResult result;
  result.variables = script.int_variables();
  const std::size_t n = result.variables.size();
  const std::uint64_t width = static_cast<std::uint64_t>(2 * bound.value + 1);
  std::uint64_t grid = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (grid > options.max_grid / width) throw ResourceExceeded("brute-force grid exceeds cap");
    grid *= width;
  }
  CompiledFormula f(script.assertion, result.variables);
  std::vector<std::int64_t> point(n, -bound.value);
  while (true) {
    ++result.points_checked;
    if (f.eval(point)) {
      result.sat = true;
      result.models.push_back(point);
      if (result.models.size() >= options.max_models) {
        result.truncated = true;
        return result;
      }
    }
    std::size_t i = 0;
    for (; i < n; ++i) {
      if (point[i] < bound.value) {
        ++point[i];
        break;
      }
      point[i] = -bound.value;
    }
    if (i == n) break;
  }
  return result;
}

std::vector<SkeletonModel> enumerate_skeleton_models(const Cnf& cnf, std::size_t cap) {
  SatSolver solver(cnf);
  std::vector<SkeletonModel> models;
  const int n = cnf.num_skeleton_vars;
  while (true) {
    SatResult r = solver.solve();
    if (r.outcome != SatOutcome::Sat) break;
    if (models.size() >= cap) throw ResourceExceeded("skeleton model enumeration exceeds cap");
    SkeletonModel m(r.model.begin(), r.model.begin() + n);
    Clause block;
    for (int v = 0; v < n; ++v) block.push_back(m[v] ? Lit::neg(v) : Lit::pos(v));
    models.push_back(std::move(m));
    solver.add_clause(std::move(block));
  }
  std::sort(models.begin(), models.end());
  return models;
}

std::vector<SkeletonModel> enumerate_models_direct(const Cnf& cnf) {
  if (cnf.num_vars > 24) throw ResourceExceeded("too many variables for direct enumeration");
  std::set<SkeletonModel> models;
  std::vector<bool> a(cnf.num_vars);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << cnf.num_vars); ++bits) {
    for (int v = 0; v < cnf.num_vars; ++v) a[v] = (bits >> v) & 1u;
    if (evaluate(cnf, a)) models.emplace(a.begin(), a.begin() + cnf.num_skeleton_vars);
  }
  return {models.begin(), models.end()};
}

SkeletonModel apply(const SkeletonMap& theta, const SkeletonModel& model) {
  SkeletonModel out = model;
  for (const auto& [v, image] : theta) out[v] = model[image];
  return out;
}

OrbitReport orbit_coverage(const std::vector<SkeletonModel>& psi_models,
                           const std::vector<SkeletonModel>& sbp_models,
                           const std::vector<SkeletonMap>& generators) {
  OrbitReport report;
  const std::set<SkeletonModel> psi(psi_models.begin(), psi_models.end());
  const std::set<SkeletonModel> sbp(sbp_models.begin(), sbp_models.end());
  for (const auto& m : sbp)
    if (!psi.count(m)) ++report.foreign_survivors;
  std::set<SkeletonModel> visited;
  for (const auto& start : psi) {
    if (visited.count(start)) continue;
    ++report.orbits;
    std::deque<SkeletonModel> queue{start};
    visited.insert(start);
    bool covered = false;
    while (!queue.empty()) {
      SkeletonModel m = std::move(queue.front());
      queue.pop_front();
      if (sbp.count(m)) {
        covered = true;
        ++report.survivors;
      } else {
        ++report.pruned;
      }
      for (const auto& g : generators) {
        SkeletonModel next = symsmt::apply(g, m);
        if (!psi.count(next)) {
          ++report.escaped;
          continue;
        }
        if (visited.insert(next).second) queue.push_back(std::move(next));
      }
    }
    if (!covered) ++report.empty_orbits;
  }
  return report;
}

}  // namespace symsmt
