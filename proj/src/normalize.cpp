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

#include <algorithm>

#include "symsmt/frontend.hpp"

namespace symsmt {
namespace {

template <typename T>
void sort_by_key(std::vector<T>& v) {
  std::sort(v.begin(), v.end(), [](const T& a, const T& b) { return a.key() < b.key(); });
}

Term fold(Term::Kind kind, const std::vector<Term>& raw) {
  const bool is_add = kind == Term::Kind::Add;
  BigInt acc = is_add ? 0 : 1;
  std::vector<Term> rest;
  for (const auto& r : raw) {
    Term n = normalize(r);
    if (n.kind() == kind) {
      for (const auto& c : n.args()) {
        if (c.kind() == Term::Kind::IntConst)
          acc = is_add ? BigInt(acc + c.value()) : BigInt(acc * c.value());
        else
          rest.push_back(c);
      }
    } else if (n.kind() == Term::Kind::IntConst) {
      acc = is_add ? BigInt(acc + n.value()) : BigInt(acc * n.value());
    } else {
      rest.push_back(n);
    }
  }
  if (!is_add && acc == 0) return Term::constant(0);
  if (acc != (is_add ? 0 : 1) || rest.empty()) rest.push_back(Term::constant(acc));
  if (rest.size() == 1) return rest.front();
  sort_by_key(rest);
  return is_add ? Term::add(std::move(rest)) : Term::mul(std::move(rest));
}

Formula fold(Formula::Kind kind, const std::vector<Formula>& raw) {
  const bool is_and = kind == Formula::Kind::And;
  std::vector<Formula> rest;
  auto push = [&](const Formula& f) -> bool {
    if (f.kind() == Formula::Kind::Const) return f.value() != is_and;  // absorbing element
    rest.push_back(f);
    return false;
  };
  for (const auto& r : raw) {
    Formula n = normalize(r);
    if (n.kind() == kind) {
      for (const auto& c : n.args())
        if (push(c)) return Formula::constant(!is_and);
    } else if (push(n)) {
      return Formula::constant(!is_and);
    }
  }
  sort_by_key(rest);
  rest.erase(std::unique(rest.begin(), rest.end()), rest.end());
  if (rest.empty()) return Formula::constant(is_and);
  if (rest.size() == 1) return rest.front();
  return is_and ? Formula::conj(std::move(rest)) : Formula::disj(std::move(rest));
}

}  // namespace

Term normalize(const Term& term) {
  switch (term.kind()) {
    case Term::Kind::IntConst:
    case Term::Kind::Var: return term;
    case Term::Kind::Sub: return normalize(Term::add({term.args()[0], Term::neg(term.args()[1])}));
    case Term::Kind::Neg: {
      Term n = normalize(term.args()[0]);
      if (n.kind() == Term::Kind::IntConst) return Term::constant(-n.value());
      if (n.kind() == Term::Kind::Neg) return n.args()[0];
      return Term::neg(n);
    }
    case Term::Kind::Add:
    case Term::Kind::Mul: return fold(term.kind(), term.args());
  }
  return term;
}

Atom normalize(const Atom& atom) {
  Term lhs = normalize(atom.lhs);
  Term rhs = normalize(atom.rhs);
  switch (atom.relation) {
    case Relation::Gt: return {Relation::Lt, rhs, lhs};
    case Relation::Ge: return {Relation::Le, rhs, lhs};
    case Relation::Eq:
    case Relation::Neq:
      if (rhs.key() < lhs.key()) std::swap(lhs, rhs);
      return {atom.relation, lhs, rhs};
    default: return {atom.relation, lhs, rhs};
  }
}

Formula normalize(const Formula& formula) {
  switch (formula.kind()) {
    case Formula::Kind::Atom: return Formula::atom(normalize(formula.atom()));
    case Formula::Kind::Const: return formula;
    case Formula::Kind::Not: {
      Formula n = normalize(formula.args()[0]);
      if (n.kind() == Formula::Kind::Const) return Formula::constant(!n.value());
      if (n.kind() == Formula::Kind::Not) return n.args()[0];
      return Formula::negate(n);
    }
    case Formula::Kind::Implies: {
      Formula lhs = normalize(formula.args()[0]);
      Formula rhs = normalize(formula.args()[1]);
      if (lhs.kind() == Formula::Kind::Const)
        return lhs.value() ? rhs : Formula::constant(true);
      if (rhs.kind() == Formula::Kind::Const)
        return rhs.value() ? rhs : normalize(Formula::negate(lhs));
      return Formula::implies(lhs, rhs);
    }
    case Formula::Kind::And:
    case Formula::Kind::Or: return fold(formula.kind(), formula.args());
  }
  return formula;
}

Script normalize(const Script& script) {
  Script out = script;
  out.assertion = normalize(script.assertion);
  return out;
}

}  // namespace symsmt
