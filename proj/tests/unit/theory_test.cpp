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
#include "symsmt/theory.hpp"

namespace symsmt {
namespace {

// Atoms of a conjunction written as SMT-LIB over x, y, z.
std::vector<Atom> literals(const std::string& conj) {
  Script s = parse_script("(declare-fun x () Int)(declare-fun y () Int)(declare-fun z () Int)(assert " + conj + ")");
  std::vector<Atom> out;
  if (s.assertion.kind() == Formula::Kind::Atom) return {s.assertion.atom()};
  for (const auto& f : s.assertion.args()) out.push_back(f.atom());
  return out;
}

bool satisfies(const std::vector<Atom>& lits, const TheoryModel& m) {
  testing::Point p;
  for (const auto& [k, v] : m.values) p[k] = v;
  for (const auto& a : lits) {
    std::vector<std::string> vars;
    collect_variables(a.lhs, vars);
    collect_variables(a.rhs, vars);
    for (const auto& v : vars)
      if (!p.count(v)) return false;
    if (!testing::eval_atom(a, p)) return false;
  }
  return true;
}

TEST(CheckConsistency, GoldenAfterSwap) {
  auto lits = literals("(and (> z 2) (>= x 8) (< y 8) (>= (+ x y) 10) (> (+ x y) 3))");
  auto r = check_consistency(lits, DomainBound{16}, Deadline::never());
  ASSERT_EQ(r.outcome, Consistency::Consistent);
  EXPECT_TRUE(satisfies(lits, r.model));
}

TEST(CheckConsistency, ContradictoryBounds) {
  auto lits = literals("(and (< x 0) (> x 0))");
  auto r = check_consistency(lits, DomainBound{8}, Deadline::never());
  EXPECT_EQ(r.outcome, Consistency::Inconsistent);
  EXPECT_FALSE(r.core.empty());
}

TEST(CheckConsistency, ProductWitnesses) {
  auto lits = literals("(and (= (* x y) 6) (>= x 2) (>= y 2))");
  auto r = check_consistency(lits, DomainBound{4}, Deadline::never());
  ASSERT_EQ(r.outcome, Consistency::Consistent);
  using Pair = std::pair<std::int64_t, std::int64_t>;
  Pair xy{r.model.values.at("x"), r.model.values.at("y")};
  EXPECT_TRUE((xy == Pair{2, 3}) || (xy == Pair{3, 2}));
  // Independent count over the 81 points.
  int witnesses = 0;
  for (int x = -4; x <= 4; ++x)
    for (int y = -4; y <= 4; ++y) witnesses += x * y == 6 && x >= 2 && y >= 2;
  EXPECT_EQ(witnesses, 2);
}

TEST(CheckConsistency, BoundIsRespected) {
  auto lits = literals("(> x 5)");
  EXPECT_EQ(check_consistency(lits, DomainBound{5}, Deadline::never()).outcome, Consistency::Inconsistent);
  EXPECT_EQ(check_consistency(lits, DomainBound{6}, Deadline::never()).outcome, Consistency::Consistent);
}

TEST(CheckConsistency, EmptyConjunction) {
  EXPECT_EQ(check_consistency({}, DomainBound{1}, Deadline::never()).outcome, Consistency::Consistent);
}

TEST(CheckConsistency, HugeConstantsOverflow) {
  auto lits = literals("(< x 100000000000000000000)");
  EXPECT_THROW(check_consistency(lits, DomainBound{3}, Deadline::never()), EvaluationOverflow);
}

TEST(CheckConsistency, LargeProductsAreExact) {
  auto lits = literals("(= (* x x x y y y z z z) 1000000000)");
  auto r = check_consistency(lits, DomainBound{10}, Deadline::never());
  ASSERT_EQ(r.outcome, Consistency::Consistent);
  EXPECT_TRUE(satisfies(lits, r.model));
}

TEST(CheckConsistency, AgreesWithEnumeration) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 400; ++i) {
    std::int64_t bound = std::uniform_int_distribution<int>(1, 5)(rng);
    std::vector<Atom> lits;
    Script conj;
    std::vector<Formula> parts;
    for (int j = std::uniform_int_distribution<int>(1, 4)(rng); j > 0; --j) {
      Script s = testing::random_script(rng, {.min_vars = 3, .max_vars = 3, .max_depth = 0});
      lits.push_back(s.assertion.atom());
      parts.push_back(s.assertion);
      conj.declarations = s.declarations;
    }
    conj.assertion = Formula::conj(parts);
    auto expected = testing::grid_search(conj, bound).has_value();
    for (bool shrink : {false, true}) {
      auto r = check_consistency(lits, DomainBound{bound}, Deadline::never(), {shrink});
      ASSERT_EQ(r.outcome == Consistency::Consistent, expected) << serialize(conj.assertion);
      if (expected) EXPECT_TRUE(satisfies(lits, r.model));
      if (!expected) {
        // The reported core is itself infeasible.
        Script core = conj;
        std::vector<Formula> kept;
        for (int idx : r.core) kept.push_back(Formula::atom(lits[idx]));
        core.assertion = Formula::conj(kept);
        EXPECT_FALSE(testing::grid_search(core, bound).has_value());
        if (!shrink) EXPECT_EQ(r.core.size(), lits.size());
      }
    }
  }
}

TEST(CheckConsistency, MonotoneInBound) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 100; ++i) {
    Script s = testing::random_script(rng, {.min_vars = 2, .max_vars = 2, .max_depth = 0});
    std::vector<Atom> lits{s.assertion.atom()};
    bool prev = false;
    for (std::int64_t b = 1; b <= 6; ++b) {
      bool now = check_consistency(lits, DomainBound{b}, Deadline::never()).outcome == Consistency::Consistent;
      EXPECT_TRUE(!prev || now);
      prev = now;
    }
  }
}

TEST(CheckConsistency, ExpiredDeadlineCancels) {
  auto lits = literals("(and (= (* x y z) 7919) (distinct x y))");
  auto r = check_consistency(lits, DomainBound{1000}, Deadline::at(Clock::now()));
  EXPECT_EQ(r.outcome, Consistency::Cancelled);
}

TEST(ConflictClause, NegatesAssignmentOnCore) {
  std::vector<int> both{0, 1};
  EXPECT_EQ(conflict_clause({true, false}, both), (Clause{Lit::neg(0), Lit::pos(1)}));
  std::vector<int> single{0};
  EXPECT_EQ(conflict_clause({true, false}, single), Clause{Lit::neg(0)});
}

TEST(ConflictClause, GoldenFullCore) {
  // P=T, Q=T, R=F, S=F, T=T over ids 0..4 in that order.
  std::vector<int> all{0, 1, 2, 3, 4};
  Clause c = conflict_clause({true, true, false, false, true}, all);
  EXPECT_EQ(c, (Clause{Lit::neg(0), Lit::neg(1), Lit::pos(2), Lit::pos(3), Lit::neg(4)}));
}

}  // namespace
}  // namespace symsmt
