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

#include "symsmt/symgraph.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "symsmt/frontend.hpp"

namespace symsmt {

int Permutation::image(int skeleton_var) const {
  auto it = skeleton_map.find(skeleton_var);
  return it == skeleton_map.end() ? skeleton_var : it->second;
}

const std::string& Permutation::image(const std::string& theory_var) const {
  auto it = theory_map.find(theory_var);
  return it == theory_map.end() ? theory_var : it->second;
}

std::vector<int> Permutation::skeleton_support() const {
  std::vector<int> out;
  for (const auto& [v, _] : skeleton_map) out.push_back(v);
  return out;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation out;
  std::vector<int> svars = b.skeleton_support();
  for (const auto& [v, _] : a.skeleton_map) svars.push_back(v);
  for (int v : svars) {
    int img = a.image(b.image(v));
    if (img != v) out.skeleton_map[v] = img;
  }
  std::vector<std::string> tvars;
  for (const auto& [v, _] : a.theory_map) tvars.push_back(v);
  for (const auto& [v, _] : b.theory_map) tvars.push_back(v);
  for (const auto& v : tvars) {
    const std::string& img = a.image(b.image(v));
    if (img != v) out.theory_map[v] = img;
  }
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  for (const auto& [v, img] : skeleton_map) out.skeleton_map[img] = v;
  for (const auto& [v, img] : theory_map) out.theory_map[img] = v;
  return out;
}

std::string to_cycle_string(const Permutation& perm, const AtomMap& phi,
                            const std::vector<std::string>& theory_order) {
  std::string out;
  std::vector<int> seen;
  for (const auto& [start, _] : perm.skeleton_map) {
    if (std::find(seen.begin(), seen.end(), start) != seen.end()) continue;
    out += "(";
    int v = start;
    do {
      if (v != start) out += ' ';
      out += v < phi.size() ? phi.label(v) : "v" + std::to_string(v);
      seen.push_back(v);
      v = perm.image(v);
    } while (v != start);
    out += ")";
  }
  std::vector<std::string> order = theory_order;
  for (const auto& [v, _] : perm.theory_map)
    if (std::find(order.begin(), order.end(), v) == order.end()) order.push_back(v);
  std::vector<std::string> done;
  for (const auto& start : order) {
    if (!perm.theory_map.count(start)) continue;
    if (std::find(done.begin(), done.end(), start) != done.end()) continue;
    out += "(";
    std::string v = start;
    do {
      if (v != start) out += ' ';
      out += v;
      done.push_back(v);
      v = perm.image(v);
    } while (v != start);
    out += ")";
  }
  return out.empty() ? "()" : out;
}

std::vector<std::vector<int>> ColoredGraph::adjacency() const {
  std::vector<std::vector<int>> adj(num_vertices);
  for (const auto& [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

namespace {

class GraphBuilder {
 public:
  int vertex(std::string label, VertexOrigin origin, int index = -1) {
    labels_.push_back(std::move(label));
    graph_.origin.push_back(origin);
    graph_.origin_index.push_back(index);
    return graph_.num_vertices++;
  }

  void edge(int a, int b) { graph_.edges.emplace_back(std::min(a, b), std::max(a, b)); }

  int shared(const std::string& key, const std::string& label, VertexOrigin origin, bool& created) {
    auto [it, inserted] = shared_.emplace(key, -1);
    created = inserted;
    if (inserted) it->second = vertex(label, origin);
    return it->second;
  }

  // Connects `parent` to `child` through a position vertex for slot `slot`.
  void positional(int parent, const std::string& op, int slot, int child) {
    int pos = vertex("pos:" + op + ":" + std::to_string(slot), VertexOrigin::Position);
    edge(parent, pos);
    edge(pos, child);
  }

  int term(const Term& t) {
    switch (t.kind()) {
      case Term::Kind::Var: return theory_.at(t.name());
      case Term::Kind::IntConst: {
        bool created;
        return shared("C:" + t.key(), "const:" + t.key(), VertexOrigin::Constant, created);
      }
      default: break;
    }
    static const std::map<Term::Kind, std::string> kOps = {
        {Term::Kind::Add, "+"}, {Term::Kind::Mul, "*"}, {Term::Kind::Neg, "neg"}, {Term::Kind::Sub, "-"}};
    const std::string& op = kOps.at(t.kind());
    bool created;
    int node = shared("T:" + t.key(), "op:" + op, VertexOrigin::Operator, created);
    if (!created) return node;
    if (t.kind() == Term::Kind::Sub) {
      for (int i = 0; i < 2; ++i) positional(node, op, i, term(t.args()[i]));
    } else {
      for (const auto& a : t.args()) edge(node, term(a));
    }
    return node;
  }

  int atom(const Atom& a) {
    const std::string op(to_string(a.relation));
    int node = vertex("rel:" + op, VertexOrigin::Operator);
    int lhs = term(a.lhs);
    int rhs = term(a.rhs);
    if (is_commutative(a.relation)) {
      edge(node, lhs);
      edge(node, rhs);
    } else {
      positional(node, op, 0, lhs);
      positional(node, op, 1, rhs);
    }
    return node;
  }

  int prop(const Prop& p, bool root) {
    switch (p.kind()) {
      case Prop::Kind::Var: return skeleton_.at(p.var());
      case Prop::Kind::Const: {
        bool created;
        return shared("B:" + p.key(), std::string(root ? "root:" : "") + "bool:" + p.key(),
                      VertexOrigin::Constant, created);
      }
      default: break;
    }
    static const std::map<Prop::Kind, std::string> kOps = {
        {Prop::Kind::And, "and"}, {Prop::Kind::Or, "or"}, {Prop::Kind::Not, "not"}, {Prop::Kind::Implies, "=>"}};
    const std::string& op = kOps.at(p.kind());
    bool created;
    int node = shared(std::string(root ? "R:" : "P:") + p.key(),
                      std::string(root ? "root:" : "") + "op:" + op, VertexOrigin::Operator, created);
    if (!created) return node;
    if (p.kind() == Prop::Kind::Implies) {
      for (int i = 0; i < 2; ++i) positional(node, op, i, prop(p.args()[i], false));
    } else {
      for (const auto& a : p.args()) edge(node, prop(a, false));
    }
    return node;
  }

  ColoredGraph build(const Prop& psi, const AtomMap& phi) {
    for (int s = 0; s < phi.size(); ++s) skeleton_.push_back(vertex("svar", VertexOrigin::SkeletonVar, s));
    for (int s = 0; s < phi.size(); ++s) {
      std::vector<std::string> vars;
      collect_variables(phi.atom(s).lhs, vars);
      collect_variables(phi.atom(s).rhs, vars);
      for (const auto& v : vars) {
        if (theory_.count(v)) continue;
        int idx = static_cast<int>(graph_.theory_vars.size());
        graph_.theory_vars.push_back(v);
        theory_[v] = vertex("tvar:Int", VertexOrigin::TheoryVar, idx);
      }
    }
    for (int s = 0; s < phi.size(); ++s) edge(skeleton_[s], atom(phi.atom(s)));
    prop(psi, true);
    return finish();
  }

  ColoredGraph finish() {
    std::vector<std::string> names = labels_;
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    graph_.color_names = names;
    graph_.colors.clear();
    for (const auto& l : labels_)
      graph_.colors.push_back(static_cast<int>(std::lower_bound(names.begin(), names.end(), l) - names.begin()));
    return std::move(graph_);
  }

 private:
  ColoredGraph graph_;
  std::vector<std::string> labels_;
  std::vector<int> skeleton_;
  std::map<std::string, int> theory_;
  std::unordered_map<std::string, int> shared_;
};

using Cells = std::vector<int>;

int densify(Cells& cells, const std::vector<std::vector<int>>* adj, const Cells* base) {
  // Sort vertices by signature (base cell, sorted neighbor cells) and renumber.
  const std::size_t n = cells.size();
  std::vector<std::vector<int>> sig(n);
  for (std::size_t v = 0; v < n; ++v) {
    sig[v].push_back(cells[v]);
    if (adj) {
      std::vector<int> nb;
      for (int u : (*adj)[v]) nb.push_back((*base)[u]);
      std::sort(nb.begin(), nb.end());
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
    }
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] < sig[b]; });
  int next = -1;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0 || sig[order[i]] != sig[order[i - 1]]) ++next;
    cells[order[i]] = next;
  }
  return next + 1;
}

int count_cells(const Cells& cells) {
  return cells.empty() ? 0 : *std::max_element(cells.begin(), cells.end()) + 1;
}

Cells refine(const std::vector<std::vector<int>>& adj, Cells cells) {
  int k = densify(cells, nullptr, nullptr);
  while (true) {
    Cells next = cells;
    int k2 = densify(next, &adj, &cells);
    cells = std::move(next);
    if (k2 == k) return cells;
    k = k2;
  }
}

Cells individualize(const Cells& cells, int v) {
  Cells out(cells.size());
  for (std::size_t u = 0; u < cells.size(); ++u) out[u] = 2 * cells[u] + (static_cast<int>(u) == v ? 0 : 1);
  return out;
}

std::vector<int> shape(const Cells& cells) {
  std::vector<int> sizes(count_cells(cells), 0);
  for (int c : cells) ++sizes[c];
  return sizes;
}

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

class Searcher {
 public:
  Searcher(const ColoredGraph& graph, const AutomorphismOptions& options)
      : graph_(graph), options_(options), adj_(graph.adjacency()) {}

  AutomorphismResult run() {
    AutomorphismResult result;
    const int n = graph_.num_vertices;
    if (n == 0) return result;
    states_.push_back(refine(adj_, graph_.colors));
    while (count_cells(states_.back()) < n) {
      const Cells& s = states_.back();
      int cell = target_cell(s);
      int v = first_in_cell(s, cell);
      targets_.push_back(cell);
      chosen_.push_back(v);
      states_.push_back(refine(adj_, individualize(s, v)));
      if (charge()) break;
    }
    UnionFind orbits(n);
    for (int d = static_cast<int>(chosen_.size()) - 1; d >= 0 && !stop_; --d) {
      const Cells& s = states_[d];
      const std::vector<int> left_shape = shape(states_[d + 1]);
      for (int w = 0; w < n && !stop_; ++w) {
        if (s[w] != targets_[d] || w == chosen_[d]) continue;
        if (orbits.find(w) == orbits.find(chosen_[d])) continue;
        if (charge()) break;
        Cells right = refine(adj_, individualize(s, w));
        if (shape(right) != left_shape) continue;
        auto g = match(d + 1, right);
        if (!g) continue;
        for (int v = 0; v < n; ++v) orbits.unite(v, (*g)[v]);
        result.generators.push_back(std::move(*g));
        if (result.generators.size() >= options_.limit) {
          limited_ = true;
          stop_ = true;
        }
      }
    }
    result.complete = !stop_;
    result.budget_exhausted = exhausted_;
    result.nodes = nodes_;
    return result;
  }

 private:
  static int target_cell(const Cells& s) {
    std::vector<int> sizes = shape(s);
    for (std::size_t c = 0; c < sizes.size(); ++c)
      if (sizes[c] > 1) return static_cast<int>(c);
    return -1;
  }

  static int first_in_cell(const Cells& s, int cell) {
    for (std::size_t v = 0; v < s.size(); ++v)
      if (s[v] == cell) return static_cast<int>(v);
    return -1;
  }

  // Counts one search node; returns true when the search must stop.
  bool charge() {
    ++nodes_;
    if (nodes_ > options_.node_budget) {
      exhausted_ = true;
      stop_ = true;
    } else if ((nodes_ & 63u) == 0 && options_.deadline.expired()) {
      stop_ = true;
    }
    return stop_;
  }

  std::optional<VertexPermutation> match(std::size_t depth, const Cells& right) {
    if (depth == states_.size() - 1) {
      const Cells& left = states_.back();
      VertexPermutation perm(graph_.num_vertices);
      std::vector<int> by_cell(graph_.num_vertices);
      for (int v = 0; v < graph_.num_vertices; ++v) by_cell[right[v]] = v;
      for (int v = 0; v < graph_.num_vertices; ++v) perm[v] = by_cell[left[v]];
      if (is_automorphism(graph_, perm)) return perm;
      return std::nullopt;
    }
    const std::vector<int> left_shape = shape(states_[depth + 1]);
    for (int u = 0; u < graph_.num_vertices; ++u) {
      if (right[u] != targets_[depth]) continue;
      if (charge()) return std::nullopt;
      Cells next = refine(adj_, individualize(right, u));
      if (shape(next) != left_shape) continue;
      if (auto g = match(depth + 1, next)) return g;
      if (stop_) return std::nullopt;
    }
    return std::nullopt;
  }

  const ColoredGraph& graph_;
  const AutomorphismOptions& options_;
  std::vector<std::vector<int>> adj_;
  std::vector<Cells> states_;
  std::vector<int> targets_;
  std::vector<int> chosen_;
  std::uint64_t nodes_ = 0;
  bool stop_ = false;
  bool exhausted_ = false;
  bool limited_ = false;
};

}  // namespace

ColoredGraph build_colored_graph(const Prop& psi, const AtomMap& phi) {
  return GraphBuilder().build(psi, phi);
}

ColoredGraph make_graph(int num_vertices, std::vector<int> colors, std::vector<std::pair<int, int>> edges) {
  ColoredGraph g;
  g.num_vertices = num_vertices;
  g.colors = std::move(colors);
  for (auto [a, b] : edges) g.edges.emplace_back(std::min(a, b), std::max(a, b));
  g.origin.assign(num_vertices, VertexOrigin::Operator);
  g.origin_index.assign(num_vertices, -1);
  int k = g.colors.empty() ? 0 : *std::max_element(g.colors.begin(), g.colors.end()) + 1;
  for (int c = 0; c < k; ++c) g.color_names.push_back("c" + std::to_string(c));
  return g;
}

bool is_automorphism(const ColoredGraph& graph, const VertexPermutation& perm) {
  const int n = graph.num_vertices;
  if (static_cast<int>(perm.size()) != n) return false;
  std::vector<char> hit(n, 0);
  for (int v = 0; v < n; ++v) {
    if (perm[v] < 0 || perm[v] >= n || hit[perm[v]]) return false;
    hit[perm[v]] = 1;
    if (graph.colors[perm[v]] != graph.colors[v]) return false;
  }
  std::vector<std::pair<int, int>> a = graph.edges;
  std::vector<std::pair<int, int>> b;
  b.reserve(a.size());
  for (auto [x, y] : a) b.emplace_back(std::min(perm[x], perm[y]), std::max(perm[x], perm[y]));
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

AutomorphismResult find_automorphism_generators(const ColoredGraph& graph, const AutomorphismOptions& options) {
  return Searcher(graph, options).run();
}

std::vector<int> refine_colors(const ColoredGraph& graph) { return refine(graph.adjacency(), graph.colors); }

bool is_symmetry(const Script& script, const Skeleton& skeleton, const Permutation& perm) {
  const AtomMap& phi = skeleton.phi;
  for (int v = 0; v < phi.size(); ++v) {
    Atom mapped = normalize(rename(phi.atom(v), perm.theory_map));
    int w = perm.image(v);
    if (w < 0 || w >= phi.size() || !(mapped == phi.atom(w))) return false;
  }
  if (!(normalize(rename(skeleton.psi, perm.skeleton_map)) == normalize(skeleton.psi))) return false;
  Formula omega = normalize(script.assertion);
  return normalize(rename(omega, perm.theory_map)) == omega;
}

std::optional<Permutation> lift_and_verify(const Script& script, const Skeleton& skeleton,
                                           const ColoredGraph& graph, const VertexPermutation& perm) {
  Permutation theta;
  for (int v = 0; v < graph.num_vertices; ++v) {
    const int w = perm.at(v);
    if (graph.origin[v] == VertexOrigin::SkeletonVar) {
      if (graph.origin[w] != VertexOrigin::SkeletonVar) return std::nullopt;
      if (graph.origin_index[v] != graph.origin_index[w])
        theta.skeleton_map[graph.origin_index[v]] = graph.origin_index[w];
    } else if (graph.origin[v] == VertexOrigin::TheoryVar) {
      if (graph.origin[w] != VertexOrigin::TheoryVar) return std::nullopt;
      if (graph.origin_index[v] != graph.origin_index[w])
        theta.theory_map[graph.theory_vars[graph.origin_index[v]]] = graph.theory_vars[graph.origin_index[w]];
    }
  }
  if (theta.is_identity()) return std::nullopt;
  if (!is_symmetry(script, skeleton, theta)) return std::nullopt;
  return theta;
}

SymmetryReport detect_symmetries(const Script& script, const Skeleton& skeleton, const SymmetryOptions& options) {
  SymmetryReport report;
  ColoredGraph graph = build_colored_graph(skeleton.psi, skeleton.phi);
  AutomorphismOptions ao;
  ao.limit = options.generator_limit;
  ao.node_budget = options.node_budget;
  ao.deadline = options.deadline;
  AutomorphismResult found = find_automorphism_generators(graph, ao);
  report.found = found.generators.size();
  report.complete = found.complete;
  report.nodes = found.nodes;
  for (const auto& g : found.generators) {
    auto theta = lift_and_verify(script, skeleton, graph, g);
    if (!theta || std::find(report.accepted.begin(), report.accepted.end(), *theta) != report.accepted.end()) {
      ++report.rejected;
      continue;
    }
    report.accepted.push_back(std::move(*theta));
  }
  return report;
}

}  // namespace symsmt
