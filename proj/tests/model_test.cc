// Copyright 2026 The Authors.
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

#include <gtest/gtest.h>

#include "nashcore/axioms.h"
#include "nashcore/generators.h"
#include "nashcore/json_io.h"
#include "nashcore/utility.h"

namespace nashcore {
namespace {

TEST(Utility, ApprovalCountsIntersection) {
  // A_i = {c1, c3}, T = {c1, c2}.
  Utility u = Utility::Approval(3, {0, 2});
  EXPECT_EQ(u.Evaluate({0, 1}), Surd(1));
  EXPECT_EQ(u.Evaluate({}), Surd(0));
}

TEST(Utility, XosExampleIsMaxOfBAndOwnA) {
  Instance inst = GenXosExample(3);
  Committee b = {inst.IndexOf("b1"), inst.IndexOf("b2"), inst.IndexOf("b3")};
  EXPECT_EQ(inst.Value(0, b), Surd(3));
  EXPECT_EQ(inst.Value(0, {inst.IndexOf("a1"), inst.IndexOf("b1")}), Surd(1));
  EXPECT_EQ(inst.Value(0, {inst.IndexOf("a2")}), Surd(0));
  EXPECT_EQ(inst.Value(1, {inst.IndexOf("a2")}), Surd(1));
}

TEST(Utility, Lb00FullPartyA) {
  // beta = 5, r = 2: x_a = 1, x_b = 0 gives 2/5; beta = 6 gives r/6 = 1/2.
  Instance five = GenLb00(5, 2);
  EXPECT_EQ(five.Value(0, {0, 1}), Surd(Rational(2, 5)));
  Instance six = GenLb00(6, 3);
  EXPECT_EQ(six.Value(0, {0, 1, 2}), Surd(Rational(1, 2)));
}

TEST(Utility, AdditiveRejectsWeightsAboveOne) {
  EXPECT_THROW(Utility::Additive({Rational(3, 2)}), MalformedUtilityError);
  EXPECT_THROW(Utility::Additive({Rational(-1)}), MalformedUtilityError);
}

TEST(Utility, TableWithMissingEntryIsMalformed) {
  Utility u = Utility::Table(2, {0, 1}, {{{0}, Rational(1)}, {{0, 1}, Rational(1)}});
  EXPECT_THROW(u.Evaluate({1}), MalformedUtilityError);
}

TEST(Axioms, AdditivePassesBoth) {
  Utility u = Utility::Additive({Rational(1, 2), Rational(1), Rational(0), Rational(1, 3)});
  AxiomReport r = CheckAxioms(u, Range(4));
  EXPECT_TRUE(r.monotone);
  EXPECT_TRUE(r.lipschitz);
  EXPECT_TRUE(r.exhaustive);
  EXPECT_EQ(SelfBoundingConstant(u, Range(4)), Surd(1));
}

TEST(Axioms, NonMonotoneTableHasWitness) {
  // u({a}) = 1, u({a, b}) = 1/2.
  Utility u = Utility::Table(2, {0, 1},
                             {{{}, Rational(0)}, {{0}, Rational(1)}, {{1}, Rational(0)}, {{0, 1}, Rational(1, 2)}});
  AxiomReport r = CheckAxioms(u, Range(2));
  ASSERT_FALSE(r.monotone);
  ASSERT_TRUE(r.monotone_witness.has_value());
  EXPECT_EQ(r.monotone_witness->t, (Committee{0, 1}));
  EXPECT_EQ(r.monotone_witness->j, 1);
}

TEST(Axioms, XosIsOneSelfBoundingButNotSubmodular) {
  Instance inst = GenXosExample(3);
  EXPECT_LE(SelfBoundingConstant(inst.utility(0), Range(inst.m())), Surd(1));
  Instance two = GenXosExample(2);
  EXPECT_FALSE(CheckSubmodular(two.utility(0), Range(two.m())).submodular);
}

TEST(Axioms, CoverageIsSubmodular) {
  Utility u = Utility::Coverage(3, {Rational(1, 2), Rational(1, 2), Rational(1)}, {{0, 1}, {1}, {2}});
  EXPECT_TRUE(CheckSubmodular(u, Range(3)).submodular);
  EXPECT_TRUE(CheckSubmodular(Utility::Additive({Rational(1), Rational(1, 2)}), Range(2)).submodular);
}

TEST(Axioms, Lb00Beta5Exhaustive) {
  Instance inst = GenLb00(5, 2, AxiomPolicy::kTrust);
  ASSERT_EQ(inst.m(), 12);
  for (int i = 0; i < inst.n(); ++i) {
    AxiomReport r = CheckAxioms(inst.utility(i), Range(12));
    EXPECT_TRUE(r.monotone && r.lipschitz && r.exhaustive) << "voter " << i;
    EXPECT_LE(SelfBoundingConstant(inst.utility(i), Range(12)), Surd(5));
  }
}

TEST(Axioms, LargeUniverseNeedsSampling) {
  Utility u = Utility::Approval(30, {0});
  EXPECT_THROW(CheckAxioms(u, Range(30)), EnumerationLimitError);
  AxiomOptions opts;
  opts.sample_budget = 200;
  AxiomReport r = CheckAxioms(u, Range(30), opts);
  EXPECT_FALSE(r.exhaustive);
  EXPECT_TRUE(r.monotone);
}

TEST(InstanceJson, RoundTrips) {
  Instance inst = GenRest1(2, 1);
  Json j = InstanceToJson(inst);
  Instance back = InstanceFromJson(j);
  EXPECT_EQ(InstanceToJson(back), j);
  Rng rng(5);
  Instance b = RandomBudgetInstance(rng, 3, 5, FuzzUtility::kCoverage);
  EXPECT_EQ(InstanceToJson(InstanceFromJson(InstanceToJson(b))), InstanceToJson(b));
}

TEST(InstanceJson, ErrorsCarryLocation) {
  Json bad = Json::parse(R"({"n": 1, "candidates": ["a"], "k": 1,
      "utilities": [{"kind": "additive", "weights": ["3/2"]}]})");
  try {
    InstanceFromJson(bad);
    FAIL() << "expected a format error";
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("/utilities"), std::string::npos) << e.what();
  }
  EXPECT_THROW(ParseJsonText("{\"n\": "), FormatError);
  Json both = Json::parse(R"({"n": 1, "candidates": ["a"], "k": 1, "budget": 1, "sizes": [1],
      "utilities": [{"kind": "approval", "approved": ["a"]}]})");
  EXPECT_THROW(InstanceFromJson(both), FormatError);
}

}  // namespace
}  // namespace nashcore
