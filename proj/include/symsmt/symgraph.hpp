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

#ifndef SYMSMT_SYMGRAPH_HPP
#define SYMSMT_SYMGRAPH_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symsmt/ast.hpp"
#include "symsmt/deadline.hpp"
#include "symsmt/skeleton.hpp"

namespace symsmt {

/// A joint permutation of skeleton variables and theory variables. Identity
/// entries are never stored.
struct Permutation {
  std::map<int, int> skeleton_map;
  std::map<std::string, std::string> theory_map;

  int image(int skeleton_var) const;
  const std::string& image(const std::string& theory_var) const;

  bool is_identity() const { return skeleton_map.empty() && theory_map.empty(); }
  /// Skeleton variables moved by the permutation, ascending.
  std::vector<int> skeleton_support() const;

  /// (a * b)(v) = a(b(v)).
  friend Permutation compose(const Permutation& a, const Permutation& b);
  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
};

/// Cycle notation, skeleton cycles first, e.g. "(Q R)(x y)". Cycles start at
/// their smallest member; theory variables are ordered by `theory_order`.
std::string to_cycle_string(const Permutation& perm, const AtomMap& phi,
                            const std::vector<std::string>& theory_order);

enum class VertexOrigin { SkeletonVar, TheoryVar, Operator, Constant, Position };

/// Vertex-colored undirected multigraph.
struct ColoredGraph {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> colors;
  std::vector<VertexOrigin> origin;
  /// Skeleton id or index into theory_vars for variable vertices, else -1.
  std::vector<int> origin_index;
  std::vector<std::string> color_names;
  std::vector<std::string> theory_vars;

  std::vector<std::vector<int>> adjacency() const;
  int num_colors() const { return static_cast<int>(color_names.size()); }
};

/// Encodes psi and phi as one graph. One vertex per skeleton variable, per
/// theory variable and per distinct constant value (each value its own
/// color); hash-consed operator vertices colored by symbol; position
/// vertices for the argument slots of non-commutative operators; an edge
/// ties every skeleton variable to the root of its atom.
ColoredGraph build_colored_graph(const Prop& psi, const AtomMap& phi);

/// Small colored graph built edge by edge; used by tests and tools.
ColoredGraph make_graph(int num_vertices, std::vector<int> colors,
                        std::vector<std::pair<int, int>> edges);

using VertexPermutation = std::vector<int>;

/// True when `perm` preserves colors and the edge multiset.
bool is_automorphism(const ColoredGraph& graph, const VertexPermutation& perm);

struct AutomorphismOptions {
  std::size_t limit = 8;
  std::uint64_t node_budget = 1000000;
  Deadline deadline;
};

struct AutomorphismResult {
  std::vector<VertexPermutation> generators;
  /// False when the node budget, the deadline or the limit cut the search.
  bool complete = true;
  bool budget_exhausted = false;
  std::uint64_t nodes = 0;
};

/// Color refinement plus individualization along the first path, searching
/// every candidate image at each level. Generators are verified automorphisms;
/// when `complete` they generate the whole color-preserving group.
AutomorphismResult find_automorphism_generators(const ColoredGraph& graph,
                                                const AutomorphismOptions& options = {});

/// Stable coloring reached by 1-dimensional Weisfeiler-Leman refinement.
std::vector<int> refine_colors(const ColoredGraph& graph);

/// Projects a graph automorphism onto the variables and accepts it only if
/// it maps the assertion, psi and every phi entry onto themselves after
/// normalization. Trivial permutations are rejected.
std::optional<Permutation> lift_and_verify(const Script& script, const Skeleton& skeleton,
                                           const ColoredGraph& graph,
                                           const VertexPermutation& perm);

/// True when the permutation maps the assertion, psi and phi onto themselves.
bool is_symmetry(const Script& script, const Skeleton& skeleton, const Permutation& perm);

struct SymmetryOptions {
  std::size_t generator_limit = 8;
  std::uint64_t node_budget = 1000000;
  Deadline deadline;
};

struct SymmetryReport {
  std::vector<Permutation> accepted;
  std::size_t found = 0;
  std::size_t rejected = 0;
  bool complete = true;
  std::uint64_t nodes = 0;
};

/// Graph construction, generator search and verification in one call.
SymmetryReport detect_symmetries(const Script& script, const Skeleton& skeleton,
                                 const SymmetryOptions& options = {});

}  // namespace symsmt

#endif  // SYMSMT_SYMGRAPH_HPP
