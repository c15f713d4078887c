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

#include "symsmt/ast.hpp"

#include <algorithm>

namespace symsmt {

std::string_view to_string(Sort sort) { return sort == Sort::Bool ? "Bool" : "Int"; }

std::string_view to_string(Relation rel) {
  switch (rel) {
    case Relation::Lt: return "<";
    case Relation::Le: return "<=";
    case Relation::Gt: return ">";
    case Relation::Ge: return ">=";
    case Relation::Eq: return "=";
    case Relation::Neq: return "distinct";
  }
  return "?";
}

Relation complement(Relation rel) {
  switch (rel) {
    case Relation::Lt: return Relation::Ge;
    case Relation::Le: return Relation::Gt;
    case Relation::Gt: return Relation::Le;
    case Relation::Ge: return Relation::Lt;
    case Relation::Eq: return Relation::Neq;
    case Relation::Neq: return Relation::Eq;
  }
  return rel;
}

bool is_commutative(Relation rel) { return rel == Relation::Eq || rel == Relation::Neq; }

namespace {

std::string join_key(std::string_view head, const auto& args) {
  std::string key = "(";
  key += head;
  for (const auto& a : args) {
    key += ' ';
    key += a.key();
  }
  key += ')';
  return key;
}

}  // namespace

Term Term::make(Kind kind, std::vector<Term> args) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->args = std::move(args);
  switch (kind) {
    case Kind::Add: node->key = join_key("+", node->args); break;
    case Kind::Sub:
    case Kind::Neg: node->key = join_key("-", node->args); break;
    case Kind::Mul: node->key = join_key("*", node->args); break;
    default: break;
  }
  return Term(std::move(node));
}

Term Term::constant(BigInt value) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::IntConst;
  node->key = value.str();
  node->value = std::move(value);
  return Term(std::move(node));
}

Term Term::var(std::string name, Sort sort) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Var;
  node->key = name;
  node->name = std::move(name);
  node->sort = sort;
  return Term(std::move(node));
}

Term Term::add(std::vector<Term> args) { return make(Kind::Add, std::move(args)); }
Term Term::sub(Term lhs, Term rhs) { return make(Kind::Sub, {std::move(lhs), std::move(rhs)}); }
// A negated literal is the negative literal: "(- 5)" and "-5" must agree.
Term Term::neg(Term arg) {
  if (arg.kind() == Kind::IntConst) return constant(-arg.value());
  return make(Kind::Neg, {std::move(arg)});
}
Term Term::mul(std::vector<Term> args) { return make(Kind::Mul, std::move(args)); }

std::string Atom::key() const {
  std::string k = "(";
  k += to_string(relation);
  k += ' ';
  k += lhs.key();
  k += ' ';
  k += rhs.key();
  k += ')';
  return k;
}

Formula Formula::make(Kind kind, std::vector<Formula> args) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->args = std::move(args);
  switch (kind) {
    case Kind::And: node->key = join_key("and", node->args); break;
    case Kind::Or: node->key = join_key("or", node->args); break;
    case Kind::Not: node->key = join_key("not", node->args); break;
    case Kind::Implies: node->key = join_key("=>", node->args); break;
    default: break;
  }
  return Formula(std::move(node));
}

Formula Formula::atom(Atom a) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Atom;
  node->key = a.key();
  node->atom = std::move(a);
  return Formula(std::move(node));
}

Formula Formula::constant(bool value) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Const;
  node->value = value;
  node->key = value ? "true" : "false";
  return Formula(std::move(node));
}

Formula Formula::conj(std::vector<Formula> args) { return make(Kind::And, std::move(args)); }
Formula Formula::disj(std::vector<Formula> args) { return make(Kind::Or, std::move(args)); }
Formula Formula::negate(Formula arg) { return make(Kind::Not, {std::move(arg)}); }
Formula Formula::implies(Formula lhs, Formula rhs) {
  return make(Kind::Implies, {std::move(lhs), std::move(rhs)});
}

std::vector<std::string> Script::int_variables() const {
  std::vector<std::string> names;
  for (const auto& d : declarations)
    if (d.sort == Sort::Int) names.push_back(d.name);
  return names;
}

Term rename(const Term& term, const Renaming& renaming) {
  switch (term.kind()) {
    case Term::Kind::IntConst: return term;
    case Term::Kind::Var: {
      auto it = renaming.find(term.name());
      return it == renaming.end() ? term : Term::var(it->second, term.sort());
    }
    case Term::Kind::Sub: return Term::sub(rename(term.args()[0], renaming), rename(term.args()[1], renaming));
    case Term::Kind::Neg: return Term::neg(rename(term.args()[0], renaming));
    case Term::Kind::Add:
    case Term::Kind::Mul: {
      std::vector<Term> args;
      args.reserve(term.args().size());
      for (const auto& a : term.args()) args.push_back(rename(a, renaming));
      return term.kind() == Term::Kind::Add ? Term::add(std::move(args)) : Term::mul(std::move(args));
    }
  }
  return term;
}

Atom rename(const Atom& atom, const Renaming& renaming) {
  return Atom{atom.relation, rename(atom.lhs, renaming), rename(atom.rhs, renaming)};
}

Formula rename(const Formula& formula, const Renaming& renaming) {
  switch (formula.kind()) {
    case Formula::Kind::Atom: return Formula::atom(rename(formula.atom(), renaming));
    case Formula::Kind::Const: return formula;
    case Formula::Kind::Not: return Formula::negate(rename(formula.args()[0], renaming));
    case Formula::Kind::Implies:
      return Formula::implies(rename(formula.args()[0], renaming), rename(formula.args()[1], renaming));
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      std::vector<Formula> args;
      args.reserve(formula.args().size());
      for (const auto& a : formula.args()) args.push_back(rename(a, renaming));
      return formula.kind() == Formula::Kind::And ? Formula::conj(std::move(args))
                                                  : Formula::disj(std::move(args));
    }
  }
  return formula;
}

void collect_variables(const Term& term, std::vector<std::string>& out) {
  if (term.kind() == Term::Kind::Var) {
    if (std::find(out.begin(), out.end(), term.name()) == out.end()) out.push_back(term.name());
    return;
  }
  for (const auto& a : term.args()) collect_variables(a, out);
}

void collect_variables(const Formula& formula, std::vector<std::string>& out) {
  if (formula.kind() == Formula::Kind::Atom) {
    collect_variables(formula.atom().lhs, out);
    collect_variables(formula.atom().rhs, out);
    return;
  }
  for (const auto& a : formula.args()) collect_variables(a, out);
}

}  // namespace symsmt
