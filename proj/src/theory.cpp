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

#include "symsmt/theory.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

#include "symsmt/errors.hpp"

namespace symsmt {
namespace {

__extension__ typedef __int128 Wide;

Wide checked_add(Wide a, Wide b) {
  Wide r;
  if (__builtin_add_overflow(a, b, &r)) throw EvaluationOverflow("overflow in theory arithmetic");
  return r;
}

Wide checked_mul(Wide a, Wide b) {
  Wide r;
  if (__builtin_mul_overflow(a, b, &r)) throw EvaluationOverflow("overflow in theory arithmetic");
  return r;
}

Wide floor_div(Wide a, Wide b) {
  Wide q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Wide ceil_div(Wide a, Wide b) { return -floor_div(-a, b); }

// Sum of coefficient * product(vars); the empty monomial is the constant.
using Monomial = std::vector<int>;
using Poly = std::map<Monomial, Wide>;

void add_into(Poly& into, const Poly& p, Wide scale) {
  for (const auto& [m, c] : p) {
    Wide& slot = into[m];
    slot = checked_add(slot, checked_mul(c, scale));
    if (slot == 0) into.erase(m);
  }
}

Poly multiply(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      std::sort(m.begin(), m.end());
      Wide& slot = out[m];
      slot = checked_add(slot, checked_mul(ca, cb));
      if (slot == 0) out.erase(m);
    }
  }
  return out;
}

class Compiler {
 public:
  Poly compile(const Term& t) {
    switch (t.kind()) {
      case Term::Kind::IntConst: {
        if (t.value() > std::numeric_limits<std::int64_t>::max() ||
            t.value() < std::numeric_limits<std::int64_t>::min())
          throw EvaluationOverflow("constant " + t.value().str() + " exceeds 64 bits");
        Poly p;
        auto v = static_cast<std::int64_t>(t.value());
        if (v != 0) p[{}] = v;
        return p;
      }
      case Term::Kind::Var: return Poly{{Monomial{index(t.name())}, 1}};
      case Term::Kind::Neg: {
        Poly p;
        add_into(p, compile(t.args()[0]), -1);
        return p;
      }
      case Term::Kind::Sub: {
        Poly p = compile(t.args()[0]);
        add_into(p, compile(t.args()[1]), -1);
        return p;
      }
      case Term::Kind::Add: {
        Poly p;
        for (const auto& a : t.args()) add_into(p, compile(a), 1);
        return p;
      }
      case Term::Kind::Mul: {
        Poly p{{Monomial{}, 1}};
        for (const auto& a : t.args()) p = multiply(p, compile(a));
        return p;
      }
    }
    return {};
  }

  int index(const std::string& name) {
    auto [it, inserted] = index_.emplace(name, static_cast<int>(names_.size()));
    if (inserted) names_.push_back(name);
    return it->second;
  }

  const std::vector<std::string>& names() const { return names_; }

 private:
  std::unordered_map<std::string, int> index_;
  std::vector<std::string> names_;
};

struct Constraint {
  enum class Kind { LeZero, EqZero, NeZero } kind;
  Wide constant = 0;
  struct TermEntry {
    Wide coeff;
    Monomial vars;
  };
  std::vector<TermEntry> terms;
  int literal = 0;
};

Constraint make_constraint(const Atom& atom, Compiler& compiler, int literal) {
  Poly p = compiler.compile(atom.lhs);
  add_into(p, compiler.compile(atom.rhs), -1);
  Constraint c;
  c.literal = literal;
  Wide scale = 1;
  Wide shift = 0;
  switch (atom.relation) {
    case Relation::Lt: c.kind = Constraint::Kind::LeZero; shift = 1; break;
    case Relation::Le: c.kind = Constraint::Kind::LeZero; break;
    case Relation::Gt: c.kind = Constraint::Kind::LeZero; scale = -1; shift = 1; break;
    case Relation::Ge: c.kind = Constraint::Kind::LeZero; scale = -1; break;
    case Relation::Eq: c.kind = Constraint::Kind::EqZero; break;
    case Relation::Neq: c.kind = Constraint::Kind::NeZero; break;
  }
  for (const auto& [m, coeff] : p) {
    if (m.empty())
      c.constant = checked_mul(coeff, scale);
    else
      c.terms.push_back({checked_mul(coeff, scale), m});
  }
  c.constant = checked_add(c.constant, shift);
  return c;
}

struct Box {
  std::vector<Wide> lo;
  std::vector<Wide> hi;
};

struct Interval {
  Wide lo;
  Wide hi;
};

Interval monomial_range(const Monomial& m, const Box& box) {
  Interval r{1, 1};
  for (int v : m) {
    Wide cands[4] = {checked_mul(r.lo, box.lo[v]), checked_mul(r.lo, box.hi[v]),
                     checked_mul(r.hi, box.lo[v]), checked_mul(r.hi, box.hi[v])};
    r.lo = *std::min_element(cands, cands + 4);
    r.hi = *std::max_element(cands, cands + 4);
  }
  return r;
}

Interval term_range(const Constraint::TermEntry& t, const Box& box) {
  Interval m = monomial_range(t.vars, box);
  Wide a = checked_mul(t.coeff, m.lo);
  Wide b = checked_mul(t.coeff, m.hi);
  return {std::min(a, b), std::max(a, b)};
}

enum class Narrow { Infeasible, Changed, Unchanged };

// Narrows the box for sum(terms) + constant <= 0, scaled by `sign`.
Narrow narrow_le(const Constraint& c, Wide sign, Box& box) {
  std::vector<Interval> ranges;
  ranges.reserve(c.terms.size());
  Wide lower = checked_mul(c.constant, sign);
  for (const auto& t : c.terms) {
    Interval r = term_range(t, box);
    if (sign < 0) r = {-r.hi, -r.lo};
    ranges.push_back(r);
    lower = checked_add(lower, r.lo);
  }
  if (lower > 0) return Narrow::Infeasible;
  bool changed = false;
  for (std::size_t i = 0; i < c.terms.size(); ++i) {
    const auto& t = c.terms[i];
    if (t.vars.size() != 1) continue;
    const int v = t.vars[0];
    const Wide a = t.coeff * sign;
    const Wide room = -(lower - ranges[i].lo);  // a * x <= room
    if (a > 0) {
      Wide ub = floor_div(room, a);
      if (ub < box.hi[v]) {
        box.hi[v] = ub;
        changed = true;
      }
    } else {
      Wide lb = ceil_div(room, a);
      if (lb > box.lo[v]) {
        box.lo[v] = lb;
        changed = true;
      }
    }
    if (box.lo[v] > box.hi[v]) return Narrow::Infeasible;
  }
  return changed ? Narrow::Changed : Narrow::Unchanged;
}

Narrow narrow(const Constraint& c, Box& box) {
  switch (c.kind) {
    case Constraint::Kind::LeZero: return narrow_le(c, 1, box);
    case Constraint::Kind::EqZero: {
      Narrow a = narrow_le(c, 1, box);
      if (a == Narrow::Infeasible) return a;
      Narrow b = narrow_le(c, -1, box);
      if (b == Narrow::Infeasible) return b;
      return (a == Narrow::Changed || b == Narrow::Changed) ? Narrow::Changed : Narrow::Unchanged;
    }
    case Constraint::Kind::NeZero: {
      Wide lo = c.constant, hi = c.constant;
      for (const auto& t : c.terms) {
        Interval r = term_range(t, box);
        lo = checked_add(lo, r.lo);
        hi = checked_add(hi, r.hi);
      }
      return (lo == 0 && hi == 0) ? Narrow::Infeasible : Narrow::Unchanged;
    }
  }
  return Narrow::Unchanged;
}

Wide evaluate(const Constraint& c, const std::vector<Wide>& point) {
  Wide sum = c.constant;
  for (const auto& t : c.terms) {
    Wide prod = t.coeff;
    for (int v : t.vars) prod = checked_mul(prod, point[v]);
    sum = checked_add(sum, prod);
  }
  return sum;
}

bool holds(const Constraint& c, const std::vector<Wide>& point) {
  Wide s = evaluate(c, point);
  switch (c.kind) {
    case Constraint::Kind::LeZero: return s <= 0;
    case Constraint::Kind::EqZero: return s == 0;
    case Constraint::Kind::NeZero: return s != 0;
  }
  return false;
}

class Search {
 public:
  Search(std::vector<Constraint> constraints, int num_vars, const Deadline& deadline)
      : constraints_(std::move(constraints)), num_vars_(num_vars), deadline_(deadline) {}

  Consistency run(Wide bound, std::vector<Wide>& witness) {
    Box box{std::vector<Wide>(num_vars_, -bound), std::vector<Wide>(num_vars_, bound)};
    return dfs(box, witness);
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  static constexpr int kMaxPasses = 64;

  bool propagate(Box& box) const {
    for (int pass = 0; pass < kMaxPasses; ++pass) {
      bool changed = false;
      for (const auto& c : constraints_) {
        Narrow r = narrow(c, box);
        if (r == Narrow::Infeasible) return false;
        changed |= r == Narrow::Changed;
      }
      if (!changed) break;
    }
    return true;
  }

  Consistency dfs(Box& box, std::vector<Wide>& witness) {
    if ((++nodes_ & 255u) == 0 && deadline_.expired()) return Consistency::Cancelled;
    if (!propagate(box)) return Consistency::Inconsistent;
    int pick = -1;
    for (int v = 0; v < num_vars_; ++v) {
      if (box.lo[v] == box.hi[v]) continue;
      if (pick < 0 || box.hi[v] - box.lo[v] < box.hi[pick] - box.lo[pick]) pick = v;
    }
    if (pick < 0) {
      for (const auto& c : constraints_)
        if (!holds(c, box.lo)) return Consistency::Inconsistent;
      witness = box.lo;
      return Consistency::Consistent;
    }
    for (Wide value = box.lo[pick]; value <= box.hi[pick]; ++value) {
      Box child = box;
      child.lo[pick] = child.hi[pick] = value;
      Consistency r = dfs(child, witness);
      if (r != Consistency::Inconsistent) return r;
    }
    return Consistency::Inconsistent;
  }

  std::vector<Constraint> constraints_;
  int num_vars_;
  const Deadline& deadline_;
  std::uint64_t nodes_ = 0;
};

struct Outcome {
  Consistency outcome;
  TheoryModel model;
  std::uint64_t nodes;
};

Outcome decide(std::span<const Atom> literals, const std::vector<int>& subset, DomainBound bound,
               const Deadline& deadline) {
  Compiler compiler;
  std::vector<Constraint> constraints;
  for (int i : subset) constraints.push_back(make_constraint(literals[i], compiler, i));
  Search search(std::move(constraints), static_cast<int>(compiler.names().size()), deadline);
  std::vector<Wide> witness;
  Consistency c = search.run(bound.value, witness);
  Outcome out{c, {}, search.nodes()};
  if (c == Consistency::Consistent)
    for (std::size_t v = 0; v < compiler.names().size(); ++v)
      out.model.values[compiler.names()[v]] = static_cast<std::int64_t>(witness[v]);
  return out;
}

}  // namespace

ConsistencyResult check_consistency(std::span<const Atom> literals, DomainBound bound,
                                    const Deadline& deadline, TheoryOptions options) {
  std::vector<int> all(literals.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  Outcome first = decide(literals, all, bound, deadline);
  ConsistencyResult result;
  result.outcome = first.outcome;
  result.nodes = first.nodes;
  if (first.outcome == Consistency::Consistent) {
    result.model = std::move(first.model);
    return result;
  }
  if (first.outcome == Consistency::Cancelled) return result;
  result.core = all;
  if (options.shrink_core) {
    for (std::size_t i = 0; i < result.core.size();) {
      std::vector<int> trial = result.core;
      trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
      Outcome o = decide(literals, trial, bound, deadline);
      result.nodes += o.nodes;
      if (o.outcome == Consistency::Inconsistent)
        result.core = std::move(trial);
      else
        ++i;
    }
  }
  return result;
}

Clause conflict_clause(const std::vector<bool>& assignment, std::span<const int> core_vars) {
  Clause clause;
  clause.reserve(core_vars.size());
  for (int v : core_vars) clause.push_back(assignment.at(v) ? Lit::neg(v) : Lit::pos(v));
  return clause;
}

}  // namespace symsmt
