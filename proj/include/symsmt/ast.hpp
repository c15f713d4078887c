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

#ifndef SYMSMT_AST_HPP
#define SYMSMT_AST_HPP

#include <map>
#include <optional>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace symsmt {

using BigInt = boost::multiprecision::cpp_int;

enum class Sort { Bool, Int };

std::string_view to_string(Sort sort);

// Terms, atoms and formulas are immutable handles onto shared nodes. Every
// node caches a preorder key; two handles are structurally equal iff their
// keys are equal, and the key order is the canonical total order used by
// normalization.

class Term {
 public:
  enum class Kind { IntConst, Var, Add, Sub, Neg, Mul };

  static Term constant(BigInt value);
  static Term var(std::string name, Sort sort = Sort::Int);
  static Term add(std::vector<Term> args);
  static Term sub(Term lhs, Term rhs);
  /// Folds a constant argument into a negative IntConst.
  static Term neg(Term arg);
  static Term mul(std::vector<Term> args);

  Kind kind() const { return node_->kind; }
  const BigInt& value() const { return node_->value; }
  const std::string& name() const { return node_->name; }
  Sort sort() const { return node_->sort; }
  const std::vector<Term>& args() const { return node_->args; }
  const std::string& key() const { return node_->key; }

  friend bool operator==(const Term& a, const Term& b) {
    return a.node_ == b.node_ || a.key() == b.key();
  }
  friend bool operator<(const Term& a, const Term& b) { return a.key() < b.key(); }

 private:
  struct Node {
    Kind kind;
    BigInt value;
    std::string name;
    Sort sort = Sort::Int;
    std::vector<Term> args;
    std::string key;
  };
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Term make(Kind kind, std::vector<Term> args);

  std::shared_ptr<const Node> node_;
};

enum class Relation { Lt, Le, Gt, Ge, Eq, Neq };

std::string_view to_string(Relation rel);
/// The relation r' with (a r' b) == not (a r b).
Relation complement(Relation rel);
bool is_commutative(Relation rel);

struct Atom {
  Relation relation;
  Term lhs;
  Term rhs;

  std::string key() const;
  friend bool operator==(const Atom& a, const Atom& b) {
    return a.relation == b.relation && a.lhs == b.lhs && a.rhs == b.rhs;
  }
};

class Formula {
 public:
  enum class Kind { Atom, Const, And, Or, Not, Implies };

  static Formula atom(Atom a);
  static Formula constant(bool value);
  static Formula conj(std::vector<Formula> args);
  static Formula disj(std::vector<Formula> args);
  static Formula negate(Formula arg);
  static Formula implies(Formula lhs, Formula rhs);

  Kind kind() const { return node_->kind; }
  const Atom& atom() const { return *node_->atom; }
  bool value() const { return node_->value; }
  const std::vector<Formula>& args() const { return node_->args; }
  const std::string& key() const { return node_->key; }

  friend bool operator==(const Formula& a, const Formula& b) {
    return a.node_ == b.node_ || a.key() == b.key();
  }
  friend bool operator<(const Formula& a, const Formula& b) { return a.key() < b.key(); }

 private:
  struct Node {
    Kind kind;
    std::optional<Atom> atom;
    bool value = false;
    std::vector<Formula> args;
    std::string key;
  };
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(Kind kind, std::vector<Formula> args);

  std::shared_ptr<const Node> node_;
};

struct Declaration {
  std::string name;
  Sort sort;

  friend bool operator==(const Declaration&, const Declaration&) = default;
};

struct ScriptMetadata {
  std::string source;
  std::string logic;
  std::map<std::string, std::string> info;
  std::vector<std::string> warnings;
};

struct Script {
  std::vector<Declaration> declarations;
  Formula assertion = Formula::constant(true);
  ScriptMetadata metadata;

  /// Names of the Int-sorted declarations, in declaration order.
  std::vector<std::string> int_variables() const;

  /// Structural equality: declarations, assertion, logic and info fields.
  friend bool operator==(const Script& a, const Script& b) {
    return a.declarations == b.declarations && a.assertion == b.assertion &&
           a.metadata.logic == b.metadata.logic && a.metadata.info == b.metadata.info;
  }
};

/// Variable renaming used to apply a theory-variable permutation.
using Renaming = std::map<std::string, std::string>;

Term rename(const Term& term, const Renaming& renaming);
Atom rename(const Atom& atom, const Renaming& renaming);
Formula rename(const Formula& formula, const Renaming& renaming);

/// Collects the variable names occurring in a term, atom or formula.
void collect_variables(const Term& term, std::vector<std::string>& out);
void collect_variables(const Formula& formula, std::vector<std::string>& out);

}  // namespace symsmt

#endif  // SYMSMT_AST_HPP
