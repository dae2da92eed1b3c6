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

#include <cmath>

#include "nashcore/nashcore.h"

namespace nashcore {
namespace {

TEST(Rest1, Shape) {
  Instance inst = GenRest1(3, 2);
  EXPECT_EQ(inst.k(), 9);
  EXPECT_EQ(inst.m(), 18);
  EXPECT_EQ(inst.n(), 6);
  EXPECT_EQ(inst.candidate_id(0), "t1_1");
  EXPECT_EQ(inst.candidate_id(9), "d1");
  EXPECT_TRUE(inst.family().IsFeasible(inst.CommitteeOf({"t1_1", "t2_2", "t3_3", "d1", "d2", "d3", "d4", "d5", "d6"})));
  EXPECT_FALSE(inst.family().IsFeasible(inst.CommitteeOf({"t1_1", "t1_2", "t2_1", "t3_3", "d1", "d2", "d3", "d4", "d5"})));
  EXPECT_THROW(GenRest1(1, 1), ParameterError);
}

TEST(Lb1615, StandardParameters) {
  Lb1615Params p = Lb1615Standard(5);
  EXPECT_EQ(p.k, 32);
  EXPECT_EQ(p.cap, 30);
  Instance inst = GenLb1615(p);
  EXPECT_EQ(inst.n(), 4);
  EXPECT_EQ(inst.m(), 6 * p.pool + p.dummies);
  // Voter a approves g_ab, g_ca and g_ad.
  Committee approved = inst.utility(0).approved();
  EXPECT_EQ(approved.size(), static_cast<std::size_t>(3 * p.pool));
  for (int party : {0, 1, 2}) EXPECT_EQ(inst.Value(0, Lb1615Take(p, party, 1)), Surd(1));
  for (int party : {3, 4, 5}) EXPECT_EQ(inst.Value(0, Lb1615Take(p, party, 1)), Surd(0));
  // The cap binds the parties, never the dummies.
  Committee w = Union(Lb1615Take(p, 0, 30), Lb1615Take(p, 1, 0));
  for (int l = 0; l < 2; ++l) w.push_back(6 * p.pool + l);
  EXPECT_TRUE(inst.family().IsFeasible(w));
  EXPECT_FALSE(inst.family().IsFeasible(Union(Lb1615Take(p, 0, 30), Lb1615Take(p, 1, 1))));
  // Any feasible W gives total utility at most 2 cap = 12 r.
  EXPECT_EQ(2 * p.cap, 12 * 5);
  EXPECT_THROW(Lb1615Standard(7), ParameterError);
}

TEST(Lb1, DeviationsSatisfyConstraints) {
  Rng rng(3);
  for (const char* target : {"1", "2", "3a", "3b"}) {
    for (int i = 0; i < 50; ++i) {
      auto [u, t] = SampleLb1Point(rng, 5, target);
      Lb1Deviation d = ComputeLb1Deviation(u, t, Rational(5));
      EXPECT_EQ(d.case_label, target);
      for (bool ok : Lb1Constraints(u, t, d.x, Rational(5))) EXPECT_TRUE(ok);
    }
  }
}

TEST(Lb1, RegionIsEnforced) {
  std::array<Rational, 3> t{Rational(0), Rational(0), Rational(0)};
  EXPECT_THROW(ComputeLb1Deviation({Rational(1), Rational(20), Rational(20), Rational(20)}, t, Rational(5)),
               OutOfRegionError);
  std::array<Rational, 4> u{Rational(6), Rational(14), Rational(14), Rational(20)};
  EXPECT_NO_THROW(ComputeLb1Deviation(u, t, Rational(5)));
  EXPECT_THROW(ComputeLb1Deviation(u, {Rational(9), Rational(0), Rational(0)}, Rational(5)), OutOfRegionError);
}

TEST(Lb1, ExplicitDeviationsOnTheInstance) {
  // At r = 5 the integer room falls short of the required (16/15)(u + 1);
  // the construction needs a larger scale.
  bool all_small = true;
  for (const auto& c : CheckUtiLowerBound(5)) all_small = all_small && c.holds;
  EXPECT_FALSE(all_small);
  for (const auto& c : CheckUtiLowerBound(40)) {
    EXPECT_TRUE(c.bound_form) << c.coalition;
    EXPECT_TRUE(c.construct_ok) << c.coalition;
    EXPECT_TRUE(c.holds) << c.coalition;
  }
}

TEST(Lb00, CompositionsCountedAndBounded) {
  for (int r : {1, 2, 3}) {
    long expected = 0;
    std::array<int, 6> c{};
    for (int code = 0; code < static_cast<int>(std::pow(r + 1, 6)); ++code) {
      int x = code, total = 0;
      for (int p = 0; p < 6; ++p) {
        c[p] = x % (r + 1);
        x /= r + 1;
        total += c[p];
      }
      expected += total == 3 * r ? 1 : 0;
    }
    Lb00CompositionReport rep = CheckLb00Compositions(5, r);
    EXPECT_EQ(rep.compositions, expected) << "r=" << r;
    EXPECT_TRUE(rep.ratio_ok) << "r=" << r;
    EXPECT_FALSE(rep.min_ratio < rep.bound);
  }
  EXPECT_THROW(GenLb00(4, 2), ParameterError);
}

TEST(Lb00, CommitteeLayout) {
  Committee w = Lb00Committee(2, {2, 0, 1, 0, 0, 1});
  EXPECT_EQ(w, (Committee{0, 1, 4, 10}));
}

TEST(Tight2Alpha, DefaultAndOverride) {
  auto [inst, l] = GenTight2Alpha(Rational(1, 2), Rational(1, 2));
  EXPECT_EQ(l.n, 6);
  EXPECT_EQ(l.y, 8);
  EXPECT_EQ(l.k, 32);
  EXPECT_EQ(inst.k(), 32);
  EXPECT_FALSE(l.overridden);
  EXPECT_EQ(l.w.size(), static_cast<std::size_t>(l.k));
  EXPECT_EQ(static_cast<long>(l.deviation.size()), l.k / 2);
  EXPECT_EQ(Intersection(l.deviation, l.c3), Committee{});
  auto [small, ls] = GenTight2Alpha(Rational(1, 2), Rational(1, 2), 4L);
  EXPECT_EQ(ls.n, 4);
  EXPECT_EQ(ls.k, 24);
  EXPECT_TRUE(ls.overridden);
  EXPECT_EQ(small.n(), 4);
  EXPECT_THROW(GenTight2Alpha(Rational(1, 2), Rational(1, 2), 3L), ParameterError);
}

TEST(Endow2, BoundBelowClosedForm) {
  Rational kappa(727, 500), eta(1163, 100);
  Interval b1 = Endow2Bound(1, kappa, eta);
  EXPECT_TRUE(CertainlyLessEq(b1, Interval(Rational(1287, 2))));
  EXPECT_TRUE(CertainlyLess(Interval(600L), b1));
  for (int beta = 1; beta <= 5; ++beta) {
    Rational closed = Rational(117, 10) * beta * Pow(Rational(55), static_cast<unsigned long>(beta));
    EXPECT_TRUE(CertainlyLessEq(Endow2Bound(beta, kappa, eta), Interval(closed))) << beta;
  }
  // The base grows as eta decreases and stops being defined well above 2.
  EXPECT_TRUE(CertainlyLess(Endow2Base(kappa, Rational(20)), Endow2Base(kappa, Rational(12))));
  EXPECT_THROW(Endow2Bound(1, kappa, Rational(6)), ParameterError);
  EXPECT_THROW(Endow2Bound(1, Rational(1), eta), ParameterError);
}

TEST(Fuzz, DeterministicPerSeed) {
  FuzzSpec spec;
  spec.utilities = {FuzzUtility::kXos, FuzzUtility::kCoverage};
  spec.families = {FuzzFamily::kPacking, FuzzFamily::kPartition};
  Rng a(99), b(99);
  for (int i = 0; i < 10; ++i) {
    EXPECT_EQ(InstanceToJson(RandomInstance(a, spec)).dump(), InstanceToJson(RandomInstance(b, spec)).dump());
  }
}

}  // namespace
}  // namespace nashcore
