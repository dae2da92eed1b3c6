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

#include "nashcore/nashcore.h"

namespace nashcore {
namespace {

Utility Cover() {
  // Element weights 1/6, 1/3, 1/2; candidate j covers elements j - 1 and j.
  return Utility::Coverage(4, {Rational(1, 6), Rational(1, 3), Rational(1, 2)}, {{0}, {0, 1}, {1, 2}, {2}});
}

TEST(Expectation, Endpoints) {
  Utility u = Cover();
  Committee t = {0, 1, 2, 3};
  EXPECT_EQ(ExactSampleExpectation(u, t, Rational(1)), u.Evaluate(t));
  EXPECT_EQ(ExactSampleExpectation(u, t, Rational(0)), Surd(0));
}

TEST(Expectation, AdditiveIsLinear) {
  Utility u = Utility::Additive({Rational(1, 2), Rational(1), Rational(0), Rational(1, 3)});
  for (Rational a : {Rational(1, 3), Rational(1, 2), Rational(9, 10)}) {
    EXPECT_EQ(ExactSampleExpectation(u, {0, 1, 3}, a), Surd(a) * u.Evaluate({0, 1, 3}));
  }
}

TEST(Expectation, SmallCoverageByHand) {
  // T = {1, 2}, each kept with probability 1/2.
  // {1}: 1/2, {2}: 5/6, both: 1. Mean (1/2 + 5/6 + 1) / 4.
  EXPECT_EQ(ExactSampleExpectation(Cover(), {1, 2}, Rational(1, 2)), Surd(Rational(7, 12)));
}

TEST(SamplingBound, HoldsWhenPremiseHolds) {
  Utility u = Cover();
  SamplingBoundReport r = VerifySamplingBound(u, {0, 1, 2, 3}, Rational(1, 2), 2);
  EXPECT_TRUE(r.premise);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.bound, Surd(Rational(1, 4)) * u.Evaluate({0, 1, 2, 3}));
  EXPECT_FALSE(r.bound > r.expectation);
  EXPECT_THROW(VerifySamplingBound(u, {0}, Rational(1, 2), 0), ParameterError);
}

TEST(LowerTail, FewTrialsAreInconclusive) {
  Utility u = Utility::Additive(std::vector<Rational>(8, Rational(1)));
  LowerTailReport r = McLowerTail(u, Range(8), Rational(1, 2), Rational(1, 2), 1, 1, 5);
  EXPECT_EQ(r.verdict, TailVerdict::kInconclusive);
  EXPECT_EQ(r.trials, 1);
}

TEST(LowerTail, ZeroDeltaGivesBoundOne) {
  Utility u = Utility::Additive(std::vector<Rational>(8, Rational(1)));
  LowerTailReport r = McLowerTail(u, Range(8), Rational(1, 2), Rational(0), 1, 2000, 5);
  EXPECT_TRUE(CertainlyLessEq(Interval(Rational(999999, 1000000)), r.bound));
  EXPECT_TRUE(CertainlyLessEq(r.bound, Interval(1L)));
  EXPECT_EQ(r.verdict, TailVerdict::kPass);
  EXPECT_EQ(r.mu0, Surd(4));
}

TEST(LowerTail, IndependentOfJobs) {
  Utility u = Cover();
  LowerTailReport one = McLowerTail(u, {0, 1, 2, 3}, Rational(1, 3), Rational(1, 4), 2, 5000, 17, 1);
  LowerTailReport four = McLowerTail(u, {0, 1, 2, 3}, Rational(1, 3), Rational(1, 4), 2, 5000, 17, 4);
  EXPECT_EQ(one.hits, four.hits);
  LowerTailReport other = McLowerTail(u, {0, 1, 2, 3}, Rational(1, 3), Rational(1, 4), 2, 5000, 18, 1);
  EXPECT_EQ(other.trials, one.trials);
}

TEST(LowerTail, LargeSupportEstimatesMean) {
  Utility u = Utility::Additive(std::vector<Rational>(20, Rational(1)));
  LowerTailReport r = McLowerTail(u, Range(20), Rational(1, 2), Rational(1, 2), 1, 2000, 3);
  EXPECT_FALSE(r.mu0_exact);
  EXPECT_NEAR(r.mu0.ToDouble(), 10.0, 0.5);
  EXPECT_GT(r.mu0_stderr, 0.0);
}

TEST(Endow2, NoSmallCandidatesMeansEmptyReduction) {
  std::vector<Utility> us(2, Utility::Additive({Rational(1), Rational(1)}));
  Instance inst = Instance::WithBudget({"x", "y"}, us, FeasibilityFamily::Cardinality(2, 2),
                                       {Rational(5), Rational(5)}, Rational(10), AxiomPolicy::kTrust);
  Endow2Params p;
  p.kappa = Rational(3, 2);
  p.eta = Rational(3);
  p.phi = Rational(1);
  p.q = Rational(4, 5);
  p.trials = 100;
  Endow2Report r = Endow2Experiment(inst, {}, {0, 1}, {0, 1}, p);
  EXPECT_EQ(r.gamma, 61);
  EXPECT_TRUE(r.reduced.empty());
  EXPECT_EQ(r.joint_hits, 0);
  EXPECT_FALSE(r.witness.has_value());
}

TEST(Endow2, RejectsBadParameters) {
  Instance inst = Endow2SyntheticInstance(2, 10);
  Endow2Params p;
  p.kappa = Rational(3, 2);
  p.eta = Rational(2);
  p.phi = Rational(1);
  p.q = Rational(1, 2);
  EXPECT_THROW(Endow2Experiment(inst, {}, {0}, {0}, p), ParameterError);
  EXPECT_THROW(Endow2Experiment(GenXosExample(2), {}, {0}, {0}, p), ModeError);
}

}  // namespace
}  // namespace nashcore
