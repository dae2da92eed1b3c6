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

#include <algorithm>

#include "nashcore/nashcore.h"

namespace nashcore {
namespace {

TEST(Lemmas, SmoothedLogSmallCases) {
  EXPECT_TRUE(CheckSmoothedLog(Surd(2), Surd(1)).holds);
  EXPECT_TRUE(CheckSmoothedLog(Surd(1), Surd(1)).holds);
  EXPECT_TRUE(CheckSmoothedLog(Surd(Rational(1, 2)), Surd(0)).holds);
  EXPECT_FALSE(CheckSmoothedLog(Surd(0), Surd(0)).premise);
  EXPECT_FALSE(CheckSmoothedLog(Surd(3), Surd(1)).premise);
}

TEST(Lemmas, NablaAndMarginalsOnAdditive) {
  std::vector<Utility> us{Utility::Additive({Rational(1), Rational(1, 2), Rational(1, 3), Rational(0)})};
  Instance inst = Instance::WithK(DefaultIds(4), us, FeasibilityFamily::Cardinality(4, 3));
  Committee w = {0, 1, 2};
  LemmaCheck nabla = CheckNabla(inst, w, 0);
  EXPECT_TRUE(nabla.premise);
  EXPECT_TRUE(nabla.holds);
  for (int c = 0; c < 4; ++c) EXPECT_TRUE(Check2Abc(inst, w, 0, c).holds) << c;
  EXPECT_TRUE(CheckMatNabla(inst, w).holds);
  EXPECT_FALSE(CheckNabla(GenXosExample(2), {0, 1}, 0).premise);
}

TEST(Lemmas, MatDeltaOnDoublingDeviation) {
  std::vector<Utility> us(2, Utility::Approval(4, {0, 1, 2, 3}));
  Instance inst = Instance::WithK(DefaultIds(4), us, FeasibilityFamily::Cardinality(4, 4));
  LemmaCheck c = CheckMatDelta(inst, {0}, {0, 1}, {1, 2, 3});
  EXPECT_TRUE(c.premise);
  EXPECT_TRUE(c.holds);
  EXPECT_FALSE(CheckMatDelta(inst, {0}, {0, 1}, {1}).premise);
}

TEST(PartyProfile, MinCoverMatchesBruteForce) {
  // Brute force: choose x_p candidates of each of the pair-parties among
  // the given members; minimise the total.
  for (int a = 0; a <= 4; ++a) {
    for (int b = 0; b <= 4; ++b) {
      for (int c = 0; c <= 4; ++c) {
        int best = 1 << 20;
        for (int xab = 0; xab <= 4; ++xab) {
          for (int xac = 0; xac <= 4; ++xac) {
            for (int xbc = 0; xbc <= 4; ++xbc) {
              int sa = std::max(0, a - xab - xac), sb = std::max(0, b - xab - xbc), sc = std::max(0, c - xac - xbc);
              best = std::min(best, xab + xac + xbc + sa + sb + sc);
            }
          }
        }
        EXPECT_EQ(profile_internal::MinCover({a, b, c}), best) << a << b << c;
      }
    }
    EXPECT_EQ(profile_internal::MinCover({a}), a);
  }
}

TEST(PartyProfile, AgreesWithGenericVerifier) {
  // A scaled-down lb16-15 instance small enough for the generic search.
  Lb1615Params p{2, 2, 3, 3};
  Instance inst = GenLb1615(p);
  PartyProfileParams pp;
  pp.pool = p.pool;
  pp.cap = p.cap;
  pp.k = p.k;
  pp.gamma = Rational(16, 15);
  long checked = 0;
  for (const Committee& w : inst.family().AllFeasible()) {
    if (static_cast<int>(w.size()) != p.k) continue;
    PartyCounts counts = CountsOf(p, w);
    for (bool any : {false, true}) {
      VerifyOptions o;
      o.mode = any ? RestrainedMode::kAnyHatW : RestrainedMode::kSubsetOfW;
      o.max_candidates = 24;
      bool generic = CheckRestrainedCore(inst, w, pp.gamma, o).pass;
      EXPECT_EQ(ProfilePasses(pp, counts, any ? ProfileMode::kAnyW : ProfileMode::kSubset), generic)
          << FormatCommittee(w) << (any ? " anyW" : " subsetW");
      ++checked;
    }
  }
  EXPECT_GT(checked, 10);
}

}  // namespace
}  // namespace nashcore
