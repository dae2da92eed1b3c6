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

#include "nashcore/generators.h"
#include "nashcore/scoring.h"
#include "nashcore/solvers.h"

namespace nashcore {
namespace {

Instance Additive(std::vector<std::vector<Rational>> rows, int k) {
  int m = static_cast<int>(rows[0].size());
  std::vector<Utility> us;
  for (auto& r : rows) us.push_back(Utility::Additive(r));
  return Instance::WithK(DefaultIds(m), std::move(us), FeasibilityFamily::Cardinality(m, k));
}

TEST(Score, KnownValues) {
  EXPECT_EQ(VoterTerm(Rule::kPav, Surd(3)), Surd(Rational(11, 6)));
  EXPECT_EQ(ScoreOfValues(Rule::kSnw, {Surd(1), Surd(2)}).value, Surd(6));
  EXPECT_EQ(Phi(Rational(5, 2)), Rational(5, 3));
  EXPECT_EQ(Phi(Rational(3)), Harmonic(3));
  EXPECT_THROW(VoterTerm(Rule::kPav, Surd(Rational(1, 2))), RuleMismatchError);
}

TEST(Marginal, AddAndRemove) {
  // pav, approval, c approved: 1 / (u(W) + 1).
  std::vector<Utility> us{Utility::Approval(3, {0, 1, 2})};
  Instance inst = Instance::WithK(DefaultIds(3), us, FeasibilityFamily::Cardinality(3, 3));
  EXPECT_EQ(MarginalAdd(Rule::kPav, inst, {0, 1}, 2).total, Surd(Rational(1, 3)));
  EXPECT_EQ(MarginalRemove(Rule::kPav, inst, {0, 1}, 1).total, Surd(Rational(1, 2)));
  // snw: utility 1 -> 2 multiplies (1 + u) by 3/2.
  EXPECT_EQ(MarginalAdd(Rule::kSnw, inst, {0}, 1).total, Surd(Rational(3, 2)));
  // gpav: u(W) = 2, u(c) = 1/2 gives (1/2) / 3.
  Instance g = Additive({{Rational(1), Rational(1), Rational(1, 2)}}, 3);
  EXPECT_EQ(MarginalAdd(Rule::kGpav, g, {0, 1}, 2).total, Surd(Rational(1, 6)));
}

TEST(Marginal, DeltaStar) {
  Instance z = Additive({{Rational(1), Rational(0)}}, 2);
  EXPECT_EQ(DeltaStar(z, {0}, 1, {0}), Rational(0));
  Instance one = Additive({{Rational(0), Rational(1)}}, 2);
  EXPECT_EQ(DeltaStar(one, {}, 1, {0}), Rational(1));
  // u(W) = (1, 3), u(c) = (1, 1): 1/2 + 1/4.
  Instance two = Additive({{Rational(1), Rational(0), Rational(0), Rational(0), Rational(1)},
                           {Rational(1), Rational(1), Rational(1), Rational(0), Rational(1)}},
                          5);
  EXPECT_EQ(DeltaStar(two, {0, 1, 2}, 4, {0, 1}), Rational(3, 4));
}

TEST(SolveGlobal, SingleVoterTakesTopWeights) {
  Instance inst = Additive({{Rational(1, 2), Rational(1), Rational(1, 2), Rational(1, 3), Rational(1)}}, 3);
  for (Rule r : {Rule::kSnw, Rule::kGpav}) {
    EXPECT_EQ(SolveGlobal(inst, r).committee, (Committee{0, 1, 4})) << RuleName(r);
  }
}

TEST(SolveGlobal, BeatsEveryFeasibleCommittee) {
  Rng rng(21);
  FuzzSpec spec;
  spec.utilities = {FuzzUtility::kApproval, FuzzUtility::kAdditive, FuzzUtility::kXos};
  spec.families = {FuzzFamily::kCardinality, FuzzFamily::kPacking, FuzzFamily::kExplicit};
  for (int trial = 0; trial < 40; ++trial) {
    Instance inst = RandomInstance(rng, spec);
    SolveResult best = SolveGlobal(inst, Rule::kSnw);
    for (const Committee& c : inst.family().AllFeasible()) {
      EXPECT_FALSE(best.score < ScoreCommittee(Rule::kSnw, inst, c));
    }
  }
}

TEST(SolveGlobal, EmptyFamilyThrows) {
  std::vector<Utility> us{Utility::Approval(2, {0})};
  Instance inst = Instance::WithK(DefaultIds(2), us,
                                  FeasibilityFamily::Covering(2, 2, {ConstraintRow{{0}, 2}}));
  EXPECT_THROW(SolveGlobal(inst, Rule::kSnw), EmptyFamilyError);
}

TEST(SolveLocal, XosStartAIsLocalOptimum) {
  Instance inst = GenXosExample(3);
  Committee a = {inst.IndexOf("a1"), inst.IndexOf("a2"), inst.IndexOf("a3")};
  SolverConfig cfg;
  cfg.rule = Rule::kSnw;
  cfg.method = Method::kLocal;
  cfg.start = a;
  EXPECT_EQ(SolveLocal(inst, cfg).committee, a);
}

TEST(SolveLocal, TightConstructionStartIsLocalOptimum) {
  auto [inst, layout] = GenTight2Alpha(Rational(1, 2), Rational(1, 2));
  SolverConfig cfg;
  cfg.rule = Rule::kGpav;
  cfg.method = Method::kLocal;
  cfg.start = layout.w;
  SolveResult r = SolveLocal(inst, cfg);
  EXPECT_EQ(r.committee, layout.w);
  EXPECT_EQ(r.iterations, 0);
}

TEST(SolveLocal, NoImprovingSwapAndDeterministic) {
  Rng rng(8);
  FuzzSpec spec;
  spec.utilities = {FuzzUtility::kCoverage, FuzzUtility::kAdditive};
  spec.families = {FuzzFamily::kPartition, FuzzFamily::kCardinality};
  for (int trial = 0; trial < 30; ++trial) {
    Instance inst = RandomInstance(rng, spec);
    for (Rule rule : {Rule::kSnw, Rule::kGpav}) {
      SolverConfig cfg;
      cfg.rule = rule;
      cfg.method = Method::kLocal;
      Committee w = SolveLocal(inst, cfg).committee;
      EXPECT_FALSE(FindImprovingSwap(inst, rule, w).has_value());
      EXPECT_EQ(SolveLocal(inst, cfg).committee, w);
      // Starting from the global optimum returns it unchanged.
      Committee g = SolveGlobal(inst, rule).committee;
      if (IsBasis(inst.family(), g)) {
        cfg.start = g;
        EXPECT_EQ(SolveLocal(inst, cfg).committee, g);
      }
    }
  }
}

TEST(SolveLocal, RejectsNonMatroidFamilies) {
  std::vector<Utility> us{Utility::Approval(3, {0})};
  Instance inst = Instance::WithK(DefaultIds(3), us, FeasibilityFamily::Explicit(3, 2, {{0, 1}, {2}}));
  SolverConfig cfg;
  cfg.method = Method::kLocal;
  EXPECT_THROW(SolveLocal(inst, cfg), UnsupportedConstraintError);
}

TEST(SolveLocal, EpsilonLeavesOnlySmallGains) {
  Rng rng(4);
  FuzzSpec spec;
  spec.utilities = {FuzzUtility::kAdditive};
  for (int trial = 0; trial < 20; ++trial) {
    Instance inst = RandomInstance(rng, spec);
    SolverConfig loose;
    loose.method = Method::kLocal;
    loose.rule = Rule::kGpav;
    loose.epsilon = Rational(1);
    Committee w = SolveLocal(inst, loose).committee;
    EXPECT_FALSE(FindImprovingSwap(inst, Rule::kGpav, w, Rational(1)).has_value());
  }
}

}  // namespace
}  // namespace nashcore
