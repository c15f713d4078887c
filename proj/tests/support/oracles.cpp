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

#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

#include "symsmt/frontend.hpp"

namespace symsmt::testing {

BigInt eval_term(const Term& term, const Point& point) {
  switch (term.kind()) {
    case Term::Kind::IntConst: return term.value();
    case Term::Kind::Var: return point.at(term.name());
    case Term::Kind::Neg: return -eval_term(term.args()[0], point);
    case Term::Kind::Sub: return eval_term(term.args()[0], point) - eval_term(term.args()[1], point);
    case Term::Kind::Add: {
      BigInt sum = 0;
      for (const auto& a : term.args()) sum += eval_term(a, point);
      return sum;
    }
    case Term::Kind::Mul: {
      BigInt product = 1;
      for (const auto& a : term.args()) product *= eval_term(a, point);
      return product;
    }
  }
  return 0;
}

bool eval_atom(const Atom& atom, const Point& point) {
  BigInt l = eval_term(atom.lhs, point);
  BigInt r = eval_term(atom.rhs, point);
  switch (atom.relation) {
    case Relation::Lt: return l < r;
    case Relation::Le: return l <= r;
    case Relation::Gt: return l > r;
    case Relation::Ge: return l >= r;
    case Relation::Eq: return l == r;
    case Relation::Neq: return l != r;
  }
  return false;
}

bool eval_formula(const Formula& f, const Point& point) {
  switch (f.kind()) {
    case Formula::Kind::Atom: return eval_atom(f.atom(), point);
    case Formula::Kind::Const: return f.value();
    case Formula::Kind::Not: return !eval_formula(f.args()[0], point);
    case Formula::Kind::Implies: return !eval_formula(f.args()[0], point) || eval_formula(f.args()[1], point);
    case Formula::Kind::And:
      return std::all_of(f.args().begin(), f.args().end(), [&](const Formula& a) { return eval_formula(a, point); });
    case Formula::Kind::Or:
      return std::any_of(f.args().begin(), f.args().end(), [&](const Formula& a) { return eval_formula(a, point); });
  }
  return false;
}

std::optional<Point> grid_search(const Script& script, std::int64_t bound) {
  std::vector<std::string> vars = script.int_variables();
  std::vector<std::int64_t> values(vars.size(), -bound);
  while (true) {
    Point point;
    for (std::size_t i = 0; i < vars.size(); ++i) point[vars[i]] = values[i];
    if (eval_formula(script.assertion, point)) return point;
    std::size_t i = 0;
    while (i < values.size() && values[i] == bound) values[i++] = -bound;
    if (i == values.size()) return std::nullopt;
    ++values[i];
  }
}

bool cnf_holds(const Cnf& cnf, std::uint64_t bits) {
  for (const auto& clause : cnf.clauses) {
    bool sat = false;
    for (Lit l : clause) {
      bool value = (bits >> l.var()) & 1u;
      if (value != l.negative()) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

std::set<std::uint64_t> cnf_models(const Cnf& cnf, int project) {
  std::set<std::uint64_t> out;
  const std::uint64_t mask = project >= 64 ? ~0ULL : (1ULL << project) - 1;
  for (std::uint64_t bits = 0; bits < (1ULL << cnf.num_vars); ++bits)
    if (cnf_holds(cnf, bits)) out.insert(bits & mask);
  return out;
}

std::vector<bool> unpack(std::uint64_t bits, int n) {
  std::vector<bool> out(n);
  for (int i = 0; i < n; ++i) out[i] = (bits >> i) & 1u;
  return out;
}

std::uint64_t pack(const std::vector<bool>& bits, int n) {
  std::uint64_t out = 0;
  for (int i = 0; i < n; ++i)
    if (bits[i]) out |= 1ULL << i;
  return out;
}

std::set<VertexPermutation> brute_automorphisms(const ColoredGraph& graph) {
  const int n = graph.num_vertices;
  std::multiset<std::pair<int, int>> edges;
  for (auto [a, b] : graph.edges) edges.insert(std::minmax(a, b));
  // Enumerate every permutation inside each color class (the product of the
  // class symmetric groups), then keep the edge-preserving ones.
  std::map<int, std::vector<int>> classes;
  for (int v = 0; v < n; ++v) classes[graph.colors[v]].push_back(v);
  std::vector<std::vector<int>> members, images;
  for (auto& [color, vs] : classes) {
    members.push_back(vs);
    images.push_back(vs);
  }
  std::set<VertexPermutation> out;
  VertexPermutation perm(n);
  std::function<void(std::size_t)> rec = [&](std::size_t c) {
    if (c == members.size()) {
      std::multiset<std::pair<int, int>> mapped;
      for (auto [a, b] : graph.edges) mapped.insert(std::minmax(perm[a], perm[b]));
      if (mapped == edges) out.insert(perm);
      return;
    }
    std::vector<int> img = members[c];
    do {
      for (std::size_t i = 0; i < img.size(); ++i) perm[members[c][i]] = img[i];
      rec(c + 1);
    } while (std::next_permutation(img.begin(), img.end()));
  };
  rec(0);
  return out;
}

std::set<VertexPermutation> generated_group(const std::vector<VertexPermutation>& generators, int n) {
  VertexPermutation id(n);
  std::iota(id.begin(), id.end(), 0);
  std::set<VertexPermutation> group{id};
  std::deque<VertexPermutation> queue{id};
  while (!queue.empty()) {
    VertexPermutation p = queue.front();
    queue.pop_front();
    for (const auto& g : generators) {
      VertexPermutation q(n);
      for (int v = 0; v < n; ++v) q[v] = g[p[v]];
      if (group.insert(q).second) queue.push_back(q);
    }
  }
  return group;
}

namespace {

int draw(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Term random_term(std::mt19937_64& rng, const std::vector<std::string>& vars, const RandomScriptOptions& o,
                 int depth) {
  int choice = depth <= 0 ? draw(rng, 0, 1) : draw(rng, 0, o.nonlinear ? 5 : 4);
  switch (choice) {
    case 0: return Term::constant(draw(rng, -o.max_const, o.max_const));
    case 1: return Term::var(vars[draw(rng, 0, static_cast<int>(vars.size()) - 1)]);
    case 2: {
      std::vector<Term> args;
      for (int i = draw(rng, 2, 3); i > 0; --i) args.push_back(random_term(rng, vars, o, depth - 1));
      return Term::add(std::move(args));
    }
    case 3: return Term::sub(random_term(rng, vars, o, depth - 1), random_term(rng, vars, o, depth - 1));
    case 4: return Term::neg(random_term(rng, vars, o, depth - 1));
    default: {
      std::vector<Term> args;
      for (int i = draw(rng, 2, 3); i > 0; --i) args.push_back(random_term(rng, vars, o, 0));
      return Term::mul(std::move(args));
    }
  }
}

Formula random_formula(std::mt19937_64& rng, const std::vector<std::string>& vars, const RandomScriptOptions& o,
                       int depth) {
  int choice = depth <= 0 ? 0 : draw(rng, 0, 9);
  if (choice <= 3) {
    auto rel = static_cast<Relation>(draw(rng, 0, 5));
    return Formula::atom(Atom{rel, random_term(rng, vars, o, 1), random_term(rng, vars, o, 1)});
  }
  if (choice == 4) return Formula::constant(draw(rng, 0, 7) != 0);
  if (choice == 5) return Formula::negate(random_formula(rng, vars, o, depth - 1));
  if (choice == 6) return Formula::implies(random_formula(rng, vars, o, depth - 1),
                                           random_formula(rng, vars, o, depth - 1));
  std::vector<Formula> args;
  for (int i = draw(rng, 1, 3); i > 0; --i) args.push_back(random_formula(rng, vars, o, depth - 1));
  return choice <= 7 ? Formula::conj(std::move(args)) : Formula::disj(std::move(args));
}

}  // namespace

Script random_script(std::mt19937_64& rng, const RandomScriptOptions& options) {
  Script script;
  std::vector<std::string> vars;
  for (int i = draw(rng, options.min_vars, options.max_vars); i > 0; --i)
    vars.push_back("x" + std::to_string(vars.size()));
  for (const auto& v : vars) script.declarations.push_back({v, Sort::Int});
  script.assertion = random_formula(rng, vars, options, options.max_depth);
  return script;
}

Cnf random_cnf(std::mt19937_64& rng, int vars, int clauses, int max_width) {
  Cnf cnf;
  cnf.num_vars = cnf.num_skeleton_vars = vars;
  for (int c = 0; c < clauses; ++c) {
    Clause clause;
    for (int w = draw(rng, 1, max_width); w > 0; --w) clause.push_back(Lit::make(draw(rng, 0, vars - 1), draw(rng, 0, 1)));
    cnf.clauses.push_back(std::move(clause));
  }
  return cnf;
}

int skeleton_var_for(const Skeleton& skeleton, const std::string& smt_atom) {
  for (int id = 0; id < skeleton.phi.size(); ++id)
    if (serialize(skeleton.phi.atom(id)) == smt_atom) return id;
  return -1;
}

}  // namespace symsmt::testing
