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

#ifndef SYMSMT_SBP_HPP
#define SYMSMT_SBP_HPP

#include <functional>
#include <vector>

#include "symsmt/ast.hpp"
#include "symsmt/skeleton.hpp"
#include "symsmt/symgraph.hpp"

namespace symsmt {

enum class OrderingMode { Heuristic, Index };

/// Strict total order over skeleton variables, shared by every SBP of a solve.
struct VariableOrdering {
  std::vector<int> order;
  /// rank[v] is the position of v in `order`.
  std::vector<int> rank;

  static VariableOrdering from_order(std::vector<int> order);
};

/// Heuristic mode puts variables that occur as positive unit clauses first
/// (by id), then the rest by id. Index mode is plain id order. Auxiliary
/// variables are never ordered.
VariableOrdering order_variables(const Cnf& cnf, OrderingMode mode);

/// Skeleton support of theta sorted by the ordering, cut to its first k.
std::vector<int> truncate_support(const Permutation& theta, const VariableOrdering& ordering, int k);

struct SbpClauses {
  std::vector<Clause> clauses;
  std::vector<int> aux_vars;
  Permutation source;
  int truncation_k = 0;
};

/// Restricted lex-leader predicate over skeleton variables: for the
/// truncated support Y1..Yr, (Y1 = t(Y1) and ... and Y(i-1) = t(Y(i-1)))
/// implies (Yi -> t(Yi)). Prefix equalities are carried by chain variables
/// e_i <-> e_(i-1) and (Yi = t(Yi)), each allocated from `fresh_var`.
/// Positions whose equality is implied by the prefix are skipped, so a
/// single transposition yields the one clause (-Y1 or t(Y1)).
SbpClauses build_restricted_sbp(const Permutation& theta, const VariableOrdering& ordering, int k,
                                const std::function<int()>& fresh_var);

/// Lex-leader predicate over the theory variables moved by theta, ordered
/// by declaration: (x1 = t(x1) and ...) => (xi <= t(xi)). Returns true when
/// theta moves no theory variable. Throws SortMismatch if theta pairs
/// variables of different sorts or names an undeclared variable.
Formula build_theory_sbp(const Permutation& theta, const Script& script);

}  // namespace symsmt

#endif  // SYMSMT_SBP_HPP
