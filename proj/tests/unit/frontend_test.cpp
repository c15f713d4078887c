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

namespace symsmt {
namespace {

using testing::kGoldenInstance;

Formula parse_assertion(const std::string& decls, const std::string& body) {
  return parse_script(decls + "(assert " + body + ")").assertion;
}

TEST(ParseScript, SingleAtom) {
  Script s = parse_script("(declare-const x Int)(assert (> x 2))(check-sat)");
  ASSERT_EQ(s.declarations.size(), 1u);
  EXPECT_EQ(s.declarations[0].name, "x");
  EXPECT_EQ(s.declarations[0].sort, Sort::Int);
  ASSERT_EQ(s.assertion.kind(), Formula::Kind::Atom);
  EXPECT_EQ(s.assertion.atom().relation, Relation::Gt);
  EXPECT_EQ(s.assertion.atom().lhs.name(), "x");
  EXPECT_EQ(s.assertion.atom().rhs.value(), 2);
}

TEST(ParseScript, Golden) {
  Script s = parse_script(kGoldenInstance);
  ASSERT_EQ(s.declarations.size(), 3u);
  EXPECT_EQ(s.int_variables(), (std::vector<std::string>{"x", "y", "z"}));
  ASSERT_EQ(s.assertion.kind(), Formula::Kind::And);
  EXPECT_EQ(s.assertion.args().size(), 3u);
  EXPECT_EQ(s.metadata.logic, "QF_LIA");
  EXPECT_TRUE(s.metadata.warnings.empty());
}

TEST(ParseScript, MultipleAssertsAreConjoined) {
  Script s = parse_script("(declare-fun a () Int)(assert (< a 1))(assert (> a -3))");
  ASSERT_EQ(s.assertion.kind(), Formula::Kind::And);
  EXPECT_EQ(s.assertion.args().size(), 2u);
}

TEST(ParseScript, NoAssertIsTrue) {
  Script s = parse_script("(declare-fun a () Int)(check-sat)(exit)");
  EXPECT_EQ(s.assertion, Formula::constant(true));
}

TEST(ParseScript, RejectsQuantifier) {
  EXPECT_THROW(parse_script("(assert (forall ((x Int)) true))"), UnsupportedFeature);
}

TEST(ParseScript, RejectsOperatorsOutsideFragment) {
  const std::string d = "(declare-fun x () Int)";
  for (const char* body : {"(= (div x 2) 1)", "(= (mod x 2) 1)", "(= (abs x) 1)", "(= (ite true x 1) 1)",
                           "(let ((y x)) (= y 1))", "(exists ((y Int)) (= y x))"}) {
    EXPECT_THROW(parse_script(d + "(assert " + body + ")"), UnsupportedFeature) << body;
  }
  EXPECT_THROW(parse_script("(declare-fun f (Int) Int)"), UnsupportedFeature);
  EXPECT_THROW(parse_script("(push 1)"), UnsupportedFeature);
  EXPECT_THROW(parse_script("(declare-fun a () (Array Int Int))"), UnsupportedFeature);
}

TEST(ParseScript, MalformedInputReportsPosition) {
  try {
    parse_script("(declare-fun x () Int)\n(assert (< x 1)");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_GE(e.column(), 1u);
  }
  EXPECT_THROW(parse_script(")"), ParseError);
  EXPECT_THROW(parse_script("(assert (< y 1))"), ParseError);
  EXPECT_THROW(parse_script("(declare-fun x () Int)(declare-fun x () Int)"), ParseError);
}

TEST(ParseScript, SortErrors) {
  EXPECT_THROW(parse_script("(declare-fun x () Int)(assert (and x true))"), SortMismatch);
  EXPECT_THROW(parse_script("(declare-fun x () Int)(assert (+ x 1))"), SortMismatch);
}

TEST(ParseScript, BoolDeclarationsAllowedButNotUsable) {
  Script s = parse_script("(declare-fun p () Bool)(declare-fun x () Int)(assert (> x 0))");
  EXPECT_EQ(s.declarations.size(), 2u);
  EXPECT_EQ(s.int_variables(), std::vector<std::string>{"x"});
  EXPECT_THROW(parse_script("(declare-fun p () Bool)(assert p)"), UnsupportedFeature);
}

TEST(ParseScript, UnknownLogicWarns) {
  Script s = parse_script("(set-logic QF_BV)(declare-fun x () Int)(assert (> x 0))");
  EXPECT_EQ(s.metadata.warnings.size(), 1u);
}

TEST(ParseScript, NegativeLiteralSpellings) {
  const std::string d = "(declare-fun x () Int)";
  EXPECT_EQ(normalize(parse_assertion(d, "(< x (- 5))")), normalize(parse_assertion(d, "(< x -5)")));
  Formula f = parse_assertion(d, "(< x (- 5))");
  EXPECT_EQ(f.atom().rhs.kind(), Term::Kind::IntConst);
  EXPECT_EQ(f.atom().rhs.value(), -5);
}

TEST(ParseScript, ChainedRelationsAndDistinct) {
  const std::string d = "(declare-fun a () Int)(declare-fun b () Int)(declare-fun c () Int)";
  EXPECT_EQ(normalize(parse_assertion(d, "(< a b c)")), normalize(parse_assertion(d, "(and (< a b) (< b c))")));
  EXPECT_EQ(normalize(parse_assertion(d, "(distinct a b c)")),
            normalize(parse_assertion(d, "(and (distinct a b) (distinct a c) (distinct b c))")));
  EXPECT_EQ(normalize(parse_assertion(d, "(=> (< a 0) (< b 0) (< c 0))")),
            normalize(parse_assertion(d, "(=> (< a 0) (=> (< b 0) (< c 0)))")));
}

TEST(ParseScript, BigConstantsKeepPrecision) {
  Script s = parse_script("(declare-fun x () Int)(assert (< x 123456789012345678901234567890))");
  EXPECT_EQ(s.assertion.atom().rhs.value(), BigInt("123456789012345678901234567890"));
}

TEST(Normalize, OrderOfDisjunctsIsIrrelevant) {
  const std::string d = "(declare-fun x () Int)(declare-fun y () Int)";
  EXPECT_EQ(normalize(parse_assertion(d, "(or (< y 8) (< x 8))")),
            normalize(parse_assertion(d, "(or (< x 8) (< y 8))")));
}

TEST(Normalize, GreaterBecomesLessWithSidesSwapped) {
  Formula f = normalize(parse_assertion("(declare-fun z () Int)", "(> z 2)"));
  ASSERT_EQ(f.kind(), Formula::Kind::Atom);
  EXPECT_EQ(f.atom().relation, Relation::Lt);
  EXPECT_EQ(f.atom().lhs.value(), 2);
  EXPECT_EQ(f.atom().rhs.name(), "z");
}

TEST(Normalize, SubtractionAndFolding) {
  const std::string d = "(declare-fun x () Int)(declare-fun y () Int)";
  EXPECT_EQ(normalize(parse_assertion(d, "(< (- x y) 0)")), normalize(parse_assertion(d, "(< (+ (- y) x) 0)")));
  EXPECT_EQ(normalize(parse_assertion(d, "(< (+ 1 x 2) (* 2 3))")), normalize(parse_assertion(d, "(< (+ x 3) 6)")));
  EXPECT_EQ(normalize(parse_assertion(d, "(= (* y x) 4)")), normalize(parse_assertion(d, "(= 4 (* x y))")));
}

TEST(Normalize, GoldenIsInvariantUnderSwappingXY) {
  Script s = normalize(parse_script(kGoldenInstance));
  EXPECT_EQ(normalize(rename(s.assertion, {{"x", "y"}, {"y", "x"}})), s.assertion);
  EXPECT_NE(normalize(rename(s.assertion, {{"x", "z"}, {"z", "x"}})), s.assertion);
}

TEST(Normalize, IdempotentAndPermutationStable) {
  std::mt19937_64 rng(7);
  const Renaming theta{{"x0", "x1"}, {"x1", "x2"}, {"x2", "x0"}};
  for (int i = 0; i < 300; ++i) {
    Script s = testing::random_script(rng, {.min_vars = 3, .max_vars = 3});
    Formula once = normalize(s.assertion);
    EXPECT_EQ(normalize(once), once);
    EXPECT_EQ(normalize(rename(once, theta)), normalize(rename(s.assertion, theta)));
  }
}

TEST(Normalize, PreservesMeaning) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    Script s = testing::random_script(rng);
    Formula n = normalize(s.assertion);
    std::mt19937_64 pts(i);
    for (int p = 0; p < 20; ++p) {
      testing::Point point;
      for (const auto& v : s.int_variables()) point[v] = std::uniform_int_distribution<int>(-4, 4)(pts);
      ASSERT_EQ(testing::eval_formula(s.assertion, point), testing::eval_formula(n, point))
          << serialize(s.assertion);
    }
  }
}

TEST(Serialize, RoundTripSimple) {
  Script s = parse_script("(declare-const x Int)(assert (> x 2))(check-sat)");
  EXPECT_EQ(parse_script(serialize(s)), s);
}

TEST(Serialize, EmptyAssertion) {
  Script s = parse_script("(declare-fun a () Int)(declare-fun b () Int)");
  std::string text = serialize(s);
  EXPECT_NE(text.find("(declare-fun a () Int)\n(declare-fun b () Int)\n"), std::string::npos);
  EXPECT_NE(text.find("(assert true)"), std::string::npos);
}

TEST(Serialize, GoldenReparseNormalizesIdentically) {
  Script s = parse_script(kGoldenInstance);
  Script back = parse_script(serialize(s));
  EXPECT_EQ(back, s);
  EXPECT_EQ(normalize(back).assertion, normalize(s).assertion);
}

TEST(Serialize, RoundTripRandom) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    Script s = testing::random_script(rng);
    std::string text = serialize(s);
    EXPECT_EQ(parse_script(text), s) << text;
    EXPECT_EQ(parse_script(serialize(normalize(s))), normalize(s));
  }
}

TEST(Serialize, QuotedSymbols) {
  Script s = parse_script("(declare-fun |a b| () Int)(assert (< |a b| 1))");
  EXPECT_EQ(s.declarations[0].name, "a b");
  EXPECT_EQ(parse_script(serialize(s)), s);
}

TEST(Serialize, NegativeConstants) {
  EXPECT_EQ(serialize(Term::constant(-5)), "(- 5)");
  EXPECT_EQ(serialize(Term::constant(5)), "5");
}

}  // namespace
}  // namespace symsmt
