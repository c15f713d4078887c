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
#include "symsmt/frontend.hpp"
#include "symsmt/oracle.hpp"
#include "symsmt/skeleton.hpp"
#include "symsmt/theory.hpp"

namespace symsmt {
namespace {

using testing::kGoldenInstance;
using testing::skeleton_var_for;

Skeleton golden_skeleton() { return extract_skeleton(parse_script(kGoldenInstance)); }

TEST(ExtractSkeleton, Golden) {
  Skeleton sk = golden_skeleton();
  ASSERT_EQ(sk.phi.size(), 5);
  int p = skeleton_var_for(sk, "(< 2 z)");
  int q = skeleton_var_for(sk, "(< x 8)");
  int r = skeleton_var_for(sk, "(< y 8)");
  int s = skeleton_var_for(sk, "(< (+ x y) 10)");
  int t = skeleton_var_for(sk, "(< 3 (+ x y))");
  for (int id : {p, q, r, s, t}) ASSERT_GE(id, 0);

  Prop expected = Prop::conj({Prop::disj({Prop::var(p), Prop::var(q)}), Prop::disj({Prop::var(p), Prop::var(r)}),
                              Prop::disj({Prop::var(s), Prop::var(t)})});
  EXPECT_EQ(sk.psi, normalize(expected));
  for (int id = 0; id < 5; ++id) EXPECT_EQ(sk.phi.label(id), std::string(1, static_cast<char>('P' + id)));
}

TEST(ExtractSkeleton, TrueAssertion) {
  Skeleton sk = extract_skeleton(parse_script("(declare-fun x () Int)"));
  EXPECT_EQ(sk.psi, Prop::constant(true));
  EXPECT_TRUE(sk.phi.empty());
}

TEST(ExtractSkeleton, RepeatedAtomSharesVariable) {
  Skeleton sk = extract_skeleton(
      parse_script("(declare-fun x () Int)(declare-fun y () Int)(assert (and (or (< x 0) (< y 1)) (or (< x 0) (> y 3))))"));
  EXPECT_EQ(sk.phi.size(), 3);
  Skeleton single = extract_skeleton(parse_script("(declare-fun x () Int)(assert (and (< x 0) (> 0 x)))"));
  EXPECT_EQ(single.phi.size(), 1);
  EXPECT_EQ(single.psi, Prop::var(0));
}

TEST(ExtractSkeleton, LabelsSwitchPastElevenAtoms) {
  std::string text = "(declare-fun x () Int)(assert (or";
  for (int i = 0; i < 12; ++i) text += " (< x " + std::to_string(i) + ")";
  Skeleton sk = extract_skeleton(parse_script(text + "))"));
  EXPECT_EQ(sk.phi.label(0), "b0");
  EXPECT_EQ(sk.phi.label(11), "b11");
}

TEST(ExtractSkeleton, DecompositionIsEquisatisfiable) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 120; ++i) {
    Script s = testing::random_script(rng, {.min_vars = 1, .max_vars = 2, .max_depth = 2, .max_const = 3});
    Skeleton sk = extract_skeleton(s);
    const int n = sk.phi.size();
    ASSERT_LE(n, 16);
    bool found = false;
    for (std::uint64_t bits = 0; bits < (1ULL << n) && !found; ++bits) {
      auto x = testing::unpack(bits, n);
      if (!sk.psi.evaluate(x)) continue;
      auto lits = assignment_to_literal_conjunction(x, sk.phi);
      found = check_consistency(lits, DomainBound{3}, Deadline::never()).outcome == Consistency::Consistent;
    }
    EXPECT_EQ(found, testing::grid_search(s, 3).has_value()) << serialize(s);
  }
}

TEST(ToCnf, GoldenIsAlreadyClausal) {
  Skeleton sk = golden_skeleton();
  Cnf cnf = to_cnf(sk.psi, sk.phi.size());
  EXPECT_EQ(cnf.clauses.size(), 3u);
  EXPECT_EQ(cnf.num_aux(), 0);
}

TEST(ToCnf, SingleVariable) {
  Cnf cnf = to_cnf(Prop::var(0), 1);
  ASSERT_EQ(cnf.clauses.size(), 1u);
  EXPECT_EQ(cnf.clauses[0], Clause{Lit::pos(0)});
}

TEST(ToCnf, ConjunctionUnderDisjunctionUsesOneAuxiliary) {
  Prop f = Prop::disj({Prop::conj({Prop::var(0), Prop::var(1)}), Prop::var(2)});
  Cnf cnf = to_cnf(f, 3);
  EXPECT_EQ(cnf.num_aux(), 1);
  int direct = 0;
  for (std::uint64_t bits = 0; bits < 8; ++bits) direct += f.evaluate(testing::unpack(bits, 3));
  EXPECT_EQ(testing::cnf_models(cnf, 3).size(), static_cast<std::size_t>(direct));
}

TEST(ToCnf, Constants) {
  EXPECT_TRUE(to_cnf(Prop::constant(true), 0).clauses.empty());
  Cnf f = to_cnf(Prop::constant(false), 0);
  ASSERT_EQ(f.clauses.size(), 1u);
  EXPECT_TRUE(f.clauses[0].empty());
}

// Random propositional formulas over up to 6 variables: projecting CNF
// models onto the skeleton variables gives exactly the formula's models,
// and every auxiliary is functionally determined.
TEST(ToCnf, ModelProjectionMatchesFormula) {
  std::mt19937_64 rng(17);
  std::function<Prop(int, int)> gen = [&](int depth, int n) -> Prop {
    int c = depth == 0 ? 0 : std::uniform_int_distribution<int>(0, 6)(rng);
    if (c <= 1) return Prop::var(std::uniform_int_distribution<int>(0, n - 1)(rng));
    if (c == 2) return Prop::negate(gen(depth - 1, n));
    if (c == 3) return Prop::implies(gen(depth - 1, n), gen(depth - 1, n));
    std::vector<Prop> args;
    for (int i = std::uniform_int_distribution<int>(2, 3)(rng); i > 0; --i) args.push_back(gen(depth - 1, n));
    return c == 4 ? Prop::conj(args) : Prop::disj(args);
  };
  for (int i = 0; i < 300; ++i) {
    int n = std::uniform_int_distribution<int>(1, 6)(rng);
    Prop f = normalize(gen(3, n));
    Cnf cnf = to_cnf(f, n);
    ASSERT_LE(cnf.num_vars, 20);
    std::set<std::uint64_t> direct;
    for (std::uint64_t bits = 0; bits < (1ULL << n); ++bits)
      if (f.evaluate(testing::unpack(bits, n))) direct.insert(bits);
    std::size_t full = 0;
    for (std::uint64_t bits = 0; bits < (1ULL << cnf.num_vars); ++bits) full += testing::cnf_holds(cnf, bits);
    EXPECT_EQ(testing::cnf_models(cnf, n), direct) << f.key();
    EXPECT_EQ(full, direct.size()) << f.key();
  }
}

TEST(AssignmentLiterals, GoldenAssignment) {
  Skeleton sk = golden_skeleton();
  std::vector<bool> x(5);
  x[skeleton_var_for(sk, "(< 2 z)")] = true;
  x[skeleton_var_for(sk, "(< x 8)")] = true;
  x[skeleton_var_for(sk, "(< y 8)")] = false;
  x[skeleton_var_for(sk, "(< (+ x y) 10)")] = false;
  x[skeleton_var_for(sk, "(< 3 (+ x y))")] = true;
  std::set<std::string> got;
  for (const auto& a : assignment_to_literal_conjunction(x, sk.phi)) got.insert(serialize(a));
  EXPECT_EQ(got, (std::set<std::string>{"(< 2 z)", "(< x 8)", "(>= y 8)", "(>= (+ x y) 10)", "(< 3 (+ x y))"}));
}

TEST(AssignmentLiterals, AllFalseAndEmpty) {
  Skeleton sk = extract_skeleton(parse_script("(declare-fun x () Int)(assert (< x 0))"));
  auto lits = assignment_to_literal_conjunction({false}, sk.phi);
  ASSERT_EQ(lits.size(), 1u);
  EXPECT_EQ(serialize(lits[0]), "(>= x 0)");
  EXPECT_TRUE(assignment_to_literal_conjunction({}, AtomMap{}).empty());
}

TEST(Dimacs, RoundTripAndComments) {
  Skeleton sk = golden_skeleton();
  Cnf cnf = to_cnf(sk.psi, sk.phi.size());
  std::string text = write_dimacs(cnf, &sk.phi);
  EXPECT_NE(text.find("p cnf 5 3"), std::string::npos);
  int p = skeleton_var_for(sk, "(< 2 z)");
  std::string comment = "c " + std::to_string(p + 1) + " " + sk.phi.label(p) + " (< 2 z)\n";
  EXPECT_NE(text.find(comment), std::string::npos) << text;
  Cnf back = read_dimacs(text);
  EXPECT_EQ(back.num_vars, 5);
  EXPECT_EQ(back.clauses, cnf.clauses);
}

TEST(Dimacs, RejectsMalformed) {
  EXPECT_THROW(read_dimacs("p cnf 2 1\n1 3 0\n"), std::exception);
  EXPECT_THROW(read_dimacs("1 2 0\n"), std::exception);
}

}  // namespace
}  // namespace symsmt
