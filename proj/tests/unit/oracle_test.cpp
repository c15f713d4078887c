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

#include <random>

#include <gtest/gtest.h>

#include "../support/oracles.hpp"
#include "symsmt/errors.hpp"
#include "symsmt/frontend.hpp"
#include "symsmt/oracle.hpp"

namespace symsmt {
namespace {

TEST(BruteForce, GoldenSmallBound) {
  Script s = parse_script(testing::kGoldenInstance);
  BruteForceResult r = brute_force(s, DomainBound{3});
  ASSERT_TRUE(r.sat);
  EXPECT_EQ(r.variables, (std::vector<std::string>{"x", "y", "z"}));
  EXPECT_EQ(r.points_checked, 343u);
  // Spot-check one model by hand: x=y=z=3 gives z>2, x+y=6 in (3, 10).
  EXPECT_TRUE(evaluate(s.assertion, {{"x", 3}, {"y", 3}, {"z", 3}}));
  bool found = false;
  for (const auto& m : r.models) found |= m == std::vector<std::int64_t>{3, 3, 3};
  EXPECT_TRUE(found);
  for (const auto& m : r.models) EXPECT_TRUE(evaluate(s.assertion, {{"x", m[0]}, {"y", m[1]}, {"z", m[2]}}));
}

TEST(BruteForce, ImplicationInstance) {
  Script s = parse_script(testing::kImplicationInstance);
  BruteForceResult r = brute_force(s, DomainBound{4});
  ASSERT_TRUE(r.sat);
  EXPECT_TRUE(evaluate(s.assertion, {{"x", 3}, {"y", 3}, {"z", 3}}));
}

TEST(BruteForce, BoundaryIsUnsat) {
  Script s = parse_script("(declare-fun x () Int)(assert (> x 5))");
  EXPECT_FALSE(brute_force(s, DomainBound{5}).sat);
  EXPECT_TRUE(brute_force(s, DomainBound{6}).sat);
}

TEST(BruteForce, GridCapAndModelCap) {
  Script s = parse_script("(declare-fun a () Int)(declare-fun b () Int)(declare-fun c () Int)(assert true)");
  EXPECT_THROW(brute_force(s, DomainBound{200}), ResourceExceeded);
  BruteForceResult r = brute_force(s, DomainBound{2}, {.max_models = 10});
  EXPECT_TRUE(r.truncated);
  EXPECT_EQ(r.models.size(), 10u);
}

TEST(BruteForce, AgreesWithReferenceSearch) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) {
    Script s = testing::random_script(rng);
    EXPECT_EQ(brute_force(s, DomainBound{3}, {.max_models = 1}).sat, testing::grid_search(s, 3).has_value())
        << serialize(s);
  }
}

TEST(BruteForce, Overflow) {
  Script s = parse_script("(declare-fun x () Int)(assert (< (* x 99999999999 99999999999) 0))");
  EXPECT_THROW(brute_force(s, DomainBound{2}), EvaluationOverflow);
}

TEST(EnumerateSkeletonModels, GoldenMatchesDirectEnumeration) {
  Skeleton sk = extract_skeleton(parse_script(testing::kGoldenInstance));
  Cnf cnf = to_cnf(sk.psi, sk.phi.size());
  auto models = enumerate_skeleton_models(cnf);
  auto direct = enumerate_models_direct(cnf);
  std::set<SkeletonModel> a(models.begin(), models.end()), b(direct.begin(), direct.end());
  EXPECT_EQ(a, b);
  EXPECT_EQ(models.size(), testing::cnf_models(cnf, 5).size());
  // (P or Q)(P or R) has 5 models over P,Q,R; (S or T) has 3.
  EXPECT_EQ(models.size(), 15u);
}

TEST(EnumerateSkeletonModels, Degenerate) {
  Cnf empty;
  empty.num_vars = empty.num_skeleton_vars = 2;
  EXPECT_EQ(enumerate_skeleton_models(empty).size(), 4u);
  Cnf bottom = empty;
  bottom.clauses.push_back({});
  EXPECT_TRUE(enumerate_skeleton_models(bottom).empty());
  EXPECT_TRUE(enumerate_models_direct(bottom).empty());
}

TEST(EnumerateSkeletonModels, ProjectsAwayAuxiliaries) {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 100; ++i) {
    Cnf cnf = testing::random_cnf(rng, 9, 20, 3);
    cnf.num_skeleton_vars = 6;
    auto models = enumerate_skeleton_models(cnf);
    std::set<std::uint64_t> got;
    for (const auto& m : models) got.insert(testing::pack(m, 6));
    EXPECT_EQ(got.size(), models.size());
    EXPECT_EQ(got, testing::cnf_models(cnf, 6));
  }
}

TEST(EnumerateSkeletonModels, Cap) {
  Cnf free;
  free.num_vars = free.num_skeleton_vars = 6;
  EXPECT_THROW(enumerate_skeleton_models(free, 10), ResourceExceeded);
}

TEST(Apply, PullsValuesThroughTheta) {
  // theta = (0 1): x'(v) = x(theta(v)).
  SkeletonModel x{true, false, true};
  EXPECT_EQ(apply({{0, 1}, {1, 0}}, x), (SkeletonModel{false, true, true}));
  // theta = 0->1->2->0.
  EXPECT_EQ(apply({{0, 1}, {1, 2}, {2, 0}}, SkeletonModel{true, false, false}), (SkeletonModel{false, false, true}));
}

TEST(OrbitCoverage, GoldenKeepsLexSmallerMember) {
  // Q=1, R=2 in this encoding; the pair differs only on Q and R.
  SkeletonModel first{true, true, false, false, true};
  SkeletonModel second{true, false, true, false, true};
  std::vector<SkeletonModel> psi{first, second};
  std::vector<SkeletonModel> sbp{second};
  OrbitReport r = orbit_coverage(psi, sbp, {{{1, 2}, {2, 1}}});
  EXPECT_EQ(r.orbits, 1u);
  EXPECT_EQ(r.survivors, 1u);
  EXPECT_EQ(r.pruned, 1u);
  EXPECT_TRUE(r.ok());
}

TEST(OrbitCoverage, IdentityGroupHasSingletonOrbits) {
  std::vector<SkeletonModel> psi{{false, false}, {true, false}, {true, true}};
  OrbitReport r = orbit_coverage(psi, psi, {});
  EXPECT_EQ(r.orbits, 3u);
  EXPECT_EQ(r.survivors, 3u);
  EXPECT_TRUE(r.ok());
}

TEST(OrbitCoverage, DetectsViolations) {
  std::vector<SkeletonModel> psi{{true, false}, {false, true}};
  OrbitReport emptied = orbit_coverage(psi, {}, {{{0, 1}, {1, 0}}});
  EXPECT_EQ(emptied.empty_orbits, 1u);
  EXPECT_FALSE(emptied.ok());
  OrbitReport foreign = orbit_coverage(psi, {{true, true}}, {});
  EXPECT_EQ(foreign.foreign_survivors, 1u);
  OrbitReport escaped = orbit_coverage({{true, false}}, {{true, false}}, {{{0, 1}, {1, 0}}});
  EXPECT_EQ(escaped.escaped, 1u);
  EXPECT_FALSE(escaped.ok());
}

}  // namespace
}  // namespace symsmt
