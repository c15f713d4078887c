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

#ifndef SYMSMT_ORACLE_HPP
#define SYMSMT_ORACLE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "symsmt/ast.hpp"
#include "symsmt/skeleton.hpp"
#include "symsmt/theory.hpp"

namespace symsmt {

/// Exact evaluation of a formula straight off the AST, with no
/// normalization or skeleton decomposition involved. Variables missing from
/// the assignment throw std::out_of_range.
bool evaluate(const Formula& formula, const std::map<std::string, std::int64_t>& assignment);

struct BruteForceOptions {
  std::uint64_t max_models = 100000;
  std::uint64_t max_grid = 10000000;
};

struct BruteForceResult {
  bool sat = false;
  /// Int variables in declaration order; each model lists values in this order.
  std::vector<std::string> variables;
  std::vector<std::vector<std::int64_t>> models;
  /// True when enumeration stopped at max_models.
  bool truncated = false;
  std::uint64_t points_checked = 0;
};

/// Exhaustive search of [-B, B]^n. Throws ResourceExceeded when the grid
/// has more than max_grid points.
BruteForceResult brute_force(const Script& script, DomainBound bound, BruteForceOptions options = {});

using SkeletonModel = std::vector<bool>;

/// All models of the CNF projected to its skeleton variables, found with the
/// SAT core and blocking clauses. Throws ResourceExceeded past `cap` models.
std::vector<SkeletonModel> enumerate_skeleton_models(const Cnf& cnf, std::size_t cap = 1u << 20);

/// Same projection by direct evaluation of all 2^num_vars assignments.
/// Throws ResourceExceeded when num_vars > 24.
std::vector<SkeletonModel> enumerate_models_direct(const Cnf& cnf);

/// Skeleton part of a symmetry: variable id -> image id (identity omitted).
using SkeletonMap = std::map<int, int>;

/// theta(x)(v) = x(theta(v)).
SkeletonModel apply(const SkeletonMap& theta, const SkeletonModel& model);

struct OrbitReport {
  std::size_t orbits = 0;
  std::size_t survivors = 0;
  std::size_t pruned = 0;
  /// Orbits with no member among the SBP models.
  std::size_t empty_orbits = 0;
  /// SBP models that are not models of the original skeleton.
  std::size_t foreign_survivors = 0;
  /// Generator images that left the model set (the generator is not a symmetry).
  std::size_t escaped = 0;

  bool ok() const { return empty_orbits == 0 && foreign_survivors == 0 && escaped == 0; }
};

/// Partitions psi_models into orbits under the group generated by
/// `generators` and checks that every orbit keeps a member in sbp_models.
OrbitReport orbit_coverage(const std::vector<SkeletonModel>& psi_models,
                           const std::vector<SkeletonModel>& sbp_models,
                           const std::vector<SkeletonMap>& generators);

}  // namespace symsmt

#endif  // SYMSMT_ORACLE_HPP
