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

#include "symsmt/sbp.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "symsmt/errors.hpp"

namespace symsmt {

VariableOrdering VariableOrdering::from_order(std::vector<int> order) {
  VariableOrdering o;
  o.rank.assign(order.size(), -1);
  for (std::size_t i = 0; i < order.size(); ++i) o.rank.at(order[i]) = static_cast<int>(i);
  o.order = std::move(order);
  return o;
}

VariableOrdering order_variables(const Cnf& cnf, OrderingMode mode) {
  const int n = cnf.num_skeleton_vars;
  std::vector<char> unit(n, 0);
  if (mode == OrderingMode::Heuristic) {
    for (const auto& c : cnf.clauses)
      if (c.size() == 1 && !c[0].negative() && !cnf.is_aux(c[0].var())) unit[c[0].var()] = 1;
  }
  std::vector<int> order;
  for (int v = 0; v < n; ++v)
    if (unit[v]) order.push_back(v);
  for (int v = 0; v < n; ++v)
    if (!unit[v]) order.push_back(v);
  return VariableOrdering::from_order(std::move(order));
}

std::vector<int> truncate_support(const Permutation& theta, const VariableOrdering& ordering, int k) {
  std::vector<int> support = theta.skeleton_support();
  std::sort(support.begin(), support.end(),
            [&](int a, int b) { return ordering.rank.at(a) < ordering.rank.at(b); });
  if (k >= 0 && support.size() > static_cast<std::size_t>(k)) support.resize(k);
  return support;
}

SbpClauses build_restricted_sbp(const Permutation& theta, const VariableOrdering& ordering, int k,
                                const std::function<int()>& fresh_var) {
  SbpClauses sbp;
  sbp.source = theta;
  sbp.truncation_k = k;
  const std::vector<int> ys = truncate_support(theta, ordering, k);
  auto emit = [&](Clause c) {
    if (canonicalize_clause(c)) sbp.clauses.push_back(std::move(c));
  };
  // A position whose equality already follows from the prefix equalities
  // constrains nothing; the second half of every 2-cycle is such a position.
  std::map<int, int> parent;
  auto find = [&](int v) {
    for (auto it = parent.find(v); it != parent.end(); it = parent.find(v)) v = it->second;
    return v;
  };
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < ys.size(); ++i) {
    int a = find(ys[i]);
    int b = find(theta.image(ys[i]));
    if (a == b) continue;
    kept.push_back(i);
    parent[a] = b;
  }

  // prev is the chain literal for the prefix; absent while the prefix is empty.
  std::optional<Lit> prev;
  for (std::size_t n = 0; n < kept.size(); ++n) {
    const Lit y = Lit::pos(ys[kept[n]]);
    const Lit ty = Lit::pos(theta.image(ys[kept[n]]));
    Clause c{~y, ty};
    if (prev) c.push_back(~*prev);
    emit(std::move(c));
    if (n + 1 == kept.size()) break;
    const Lit e = Lit::pos(fresh_var());
    sbp.aux_vars.push_back(e.var());
    // e <-> prev and (y <-> ty)
    if (prev) emit({~e, *prev});
    emit({~e, ~y, ty});
    emit({~e, y, ~ty});
    Clause both_true{~y, ~ty, e};
    Clause both_false{y, ty, e};
    if (prev) {
      both_true.push_back(~*prev);
      both_false.push_back(~*prev);
    }
    emit(std::move(both_true));
    emit(std::move(both_false));
    prev = e;
  }
  return sbp;
}

Formula build_theory_sbp(const Permutation& theta, const Script& script) {
  auto sort_of = [&](const std::string& name) {
    for (const auto& d : script.declarations)
      if (d.name == name) return d.sort;
    throw SortMismatch("undeclared variable " + name + " in permutation");
  };
  for (const auto& [from, to] : theta.theory_map)
    if (sort_of(from) != sort_of(to)) throw SortMismatch("permutation maps " + from + " to " + to);

  std::vector<std::string> support;
  for (const auto& d : script.declarations)
    if (theta.theory_map.count(d.name)) support.push_back(d.name);
  if (support.empty()) return Formula::constant(true);

  std::vector<Formula> conjuncts;
  std::vector<Formula> prefix;
  for (const auto& y : support) {
    Term lhs = Term::var(y);
    Term rhs = Term::var(theta.image(y));
    Formula le = Formula::atom({Relation::Le, lhs, rhs});
    if (prefix.empty())
      conjuncts.push_back(le);
    else
      conjuncts.push_back(Formula::implies(prefix.size() == 1 ? prefix.front() : Formula::conj(prefix), le));
    prefix.push_back(Formula::atom({Relation::Eq, lhs, rhs}));
  }
  return conjuncts.size() == 1 ? conjuncts.front() : Formula::conj(std::move(conjuncts));
}

}  // namespace symsmt
