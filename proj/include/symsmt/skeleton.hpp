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

#ifndef SYMSMT_SKELETON_HPP
#define SYMSMT_SKELETON_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "symsmt/ast.hpp"

namespace symsmt {

/// Propositional formula over skeleton variable ids.
class Prop {
 public:
  enum class Kind { Var, Const, And, Or, Not, Implies };

  static Prop var(int id);
  static Prop constant(bool value);
  static Prop conj(std::vector<Prop> args);
  static Prop disj(std::vector<Prop> args);
  static Prop negate(Prop arg);
  static Prop implies(Prop lhs, Prop rhs);

  Kind kind() const { return node_->kind; }
  int var() const { return node_->var; }
  bool value() const { return node_->value; }
  const std::vector<Prop>& args() const { return node_->args; }
  const std::string& key() const { return node_->key; }

  /// Evaluates under a total assignment to skeleton variables.
  bool evaluate(const std::vector<bool>& assignment) const;

  friend bool operator==(const Prop& a, const Prop& b) {
    return a.node_ == b.node_ || a.key() == b.key();
  }

 private:
  struct Node {
    Kind kind;
    int var = -1;
    bool value = false;
    std::vector<Prop> args;
    std::string key;
  };
  explicit Prop(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Prop make(Kind kind, std::vector<Prop> args);

  std::shared_ptr<const Node> node_;
};

/// Same canonical form as for Formula: flattened, sorted, constants folded.
Prop normalize(const Prop& prop);
/// Renames skeleton variables; ids absent from the map are kept.
Prop rename(const Prop& prop, const std::map<int, int>& renaming);

/// Bijection between skeleton variables and normalized atoms.
class AtomMap {
 public:
  /// Returns the id of `atom`, adding it when unseen. `atom` must be normalized.
  int intern(const Atom& atom);
  /// Id of a normalized atom, or -1.
  int find(const Atom& atom) const;

  int size() const { return static_cast<int>(atoms_.size()); }
  bool empty() const { return atoms_.empty(); }
  const Atom& atom(int id) const { return atoms_.at(id); }
  const std::string& label(int id) const { return labels_.at(id); }

  /// Relabels variables P, Q, R, ... when there are at most 11, else b0, b1, ...
  void assign_labels();

 private:
  std::vector<Atom> atoms_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
};

struct Skeleton {
  Prop psi = Prop::constant(true);
  AtomMap phi;
};

/// Replaces every atom of the (normalized) assertion with a skeleton
/// variable. Ids follow first occurrence in the normalized assertion.
Skeleton extract_skeleton(const Script& script);

class Lit {
 public:
  constexpr Lit() = default;
  static constexpr Lit pos(int var) { return Lit(static_cast<std::uint32_t>(var) << 1); }
  static constexpr Lit neg(int var) { return Lit((static_cast<std::uint32_t>(var) << 1) | 1u); }
  static constexpr Lit make(int var, bool negative) { return negative ? neg(var) : pos(var); }
  static constexpr Lit from_code(std::uint32_t code) { return Lit(code); }

  constexpr int var() const { return static_cast<int>(code_ >> 1); }
  constexpr bool negative() const { return code_ & 1u; }
  constexpr std::uint32_t code() const { return code_; }
  constexpr Lit operator~() const { return Lit(code_ ^ 1u); }

  /// DIMACS integer: 1-based, negative for negated literals.
  int to_dimacs() const { return negative() ? -(var() + 1) : var() + 1; }
  static Lit from_dimacs(int v) { return v > 0 ? pos(v - 1) : neg(-v - 1); }

  friend constexpr bool operator==(Lit a, Lit b) { return a.code_ == b.code_; }
  friend constexpr bool operator<(Lit a, Lit b) { return a.code_ < b.code_; }

 private:
  explicit constexpr Lit(std::uint32_t code) : code_(code) {}
  std::uint32_t code_ = 0;
};

using Clause = std::vector<Lit>;

/// Clause set over skeleton variables [0, num_skeleton_vars) followed by
/// auxiliary (Tseitin and SBP chain) variables.
struct Cnf {
  int num_vars = 0;
  int num_skeleton_vars = 0;
  std::vector<Clause> clauses;

  int new_var() { return num_vars++; }
  bool is_aux(int var) const { return var >= num_skeleton_vars; }
  int num_aux() const { return num_vars - num_skeleton_vars; }

  /// Sorts and dedupes literals; drops tautologies. Returns false if dropped.
  bool add_clause(Clause clause);
};

/// Sorts and dedupes literals. Returns false when the clause is a tautology.
bool canonicalize_clause(Clause& clause);

/// Structural CNF conversion with full biconditional definitions for every
/// auxiliary. Clause-shaped input is emitted without auxiliaries.
Cnf to_cnf(const Prop& psi, int num_skeleton_vars);

bool evaluate(const Clause& clause, const std::vector<bool>& assignment);
bool evaluate(const Cnf& cnf, const std::vector<bool>& assignment);

/// Signed atoms for a skeleton assignment: Φ(v) when v is true, otherwise Φ(v)
/// with its relation complemented.
std::vector<Atom> assignment_to_literal_conjunction(const std::vector<bool>& assignment,
                                                    const AtomMap& phi);

/// DIMACS text with "c" lines mapping each skeleton variable to its atom.
std::string write_dimacs(const Cnf& cnf, const AtomMap* phi = nullptr);
/// Reads DIMACS; all variables are treated as skeleton variables.
Cnf read_dimacs(std::string_view text);

}  // namespace symsmt

#endif  // SYMSMT_SKELETON_HPP
