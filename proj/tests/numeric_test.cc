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

#include "nashcore/interval.h"
#include "nashcore/random.h"
#include "nashcore/rational.h"
#include "nashcore/report.h"
#include "nashcore/surd.h"

namespace nashcore {
namespace {

TEST(Rational, ParsesFractionsDecimalsAndIntegers) {
  EXPECT_EQ(ParseRational("3/4"), Rational(3, 4));
  EXPECT_EQ(ParseRational("-6/8"), Rational(-3, 4));
  EXPECT_EQ(ParseRational("2.7182818285"), Rational(5436563657, 2000000000));
  EXPECT_EQ(ParseRational("11.63"), Rational(1163, 100));
  EXPECT_EQ(ParseRational("7"), Rational(7));
  EXPECT_THROW(ParseRational("1/0"), FormatError);
  EXPECT_THROW(ParseRational("abc"), FormatError);
}

TEST(Rational, ConstructedValuesAreCanonical) {
  EXPECT_EQ(MakeRational(6, 8), Rational(3, 4));
  EXPECT_EQ(ToString(MakeRational(-4, 2)), "-2");
  Rng rng(1);
  for (int i = 0; i < 200; ++i) {
    Rational q = rng.UnitRational(12);
    EXPECT_EQ(ToString(q), ToString(ParseRational(ToString(q))));
  }
  EXPECT_THROW(MakeRational(1, 0), ParameterError);
}

TEST(Rational, FloorCeilHarmonic) {
  EXPECT_EQ(Floor(Rational(7, 2)), 3);
  EXPECT_EQ(Ceil(Rational(7, 2)), 4);
  EXPECT_EQ(Floor(Rational(-1, 2)), -1);
  EXPECT_EQ(Harmonic(3), Rational(11, 6));
  EXPECT_EQ(Harmonic(0), Rational(0));
}

TEST(Surd, ArithmeticStaysExact) {
  Surd r3 = Surd::Sqrt(3);
  EXPECT_EQ(r3 * r3, Surd(3));
  EXPECT_TRUE((r3 - r3).IsRational());
  EXPECT_EQ(Surd(1) + r3 - r3, Surd(1));
  EXPECT_LT(Surd(Rational(17, 10)), r3);
  EXPECT_GT(Surd(Rational(9, 5)), r3);
  Surd x = (Surd(1) + r3) / (Surd(2) + r3);
  EXPECT_EQ(x * (Surd(2) + r3), Surd(1) + r3);
}

TEST(Surd, RationalEqualityIgnoresRepresentation) {
  Surd a = Surd::Sqrt(3) * Surd::Sqrt(3);
  EXPECT_EQ(a, Surd(3));
  EXPECT_EQ((Surd(2) - a).Sign(), -1);
}

TEST(Interval, SeparatesCloseValues) {
  Interval e = Exp(Interval(1L));
  EXPECT_TRUE(CertainlyLess(e, Interval(ParseRational("2.7182818285"))));
  EXPECT_TRUE(CertainlyLess(Interval(ParseRational("2.7182818284")), e));
  Interval l = Log(Interval(2L));
  EXPECT_TRUE(CertainlyLess(Interval(ParseRational("0.6931471805")), l));
  EXPECT_TRUE(CertainlyLess(l, Interval(ParseRational("0.6931471806"))));
  Interval s = Sqrt(Interval(2L));
  EXPECT_TRUE(CertainlyLess(s * s - Interval(2L), Interval(Rational(1, 1000000))));
}

TEST(Gamma, SugarIsASoundUpperBound) {
  GammaValue g = ParseGamma("e^1");
  EXPECT_TRUE(g.over_approximation);
  EXPECT_TRUE(CertainlyLess(Exp(Interval(1L)), Interval(g.value)));
  EXPECT_LT(g.value - ParseRational("2.7182818284"), Rational(1, 10000000000));
  GammaValue g2 = ParseGamma("e^2");
  EXPECT_TRUE(CertainlyLess(Exp(Interval(2L)), Interval(g2.value)));
  EXPECT_EQ(ParseGamma("3/2").value, Rational(3, 2));
  EXPECT_EQ(ParseGamma("1.5").value, Rational(3, 2));
  EXPECT_FALSE(ParseGamma("1.5").over_approximation);
}

TEST(Digest, Sha256KnownAnswer) {
  EXPECT_EQ(Sha256Hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  EXPECT_EQ(Sha256Hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

}  // namespace
}  // namespace nashcore
