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

#ifndef NASHCORE_SCORING_H_
#define NASHCORE_SCORING_H_

#include <cmath>
#include <string>
#include <vector>

#include "nashcore/committee.h"
#include "nashcore/errors.h"
#include "nashcore/instance.h"
#include "nashcore/rational.h"
#include "nashcore/surd.h"

namespace nashcore {

enum class Rule { kPav, kSnw, kGpav };

inline const char* RuleName(Rule r) {
  switch (r) {
    case Rule::kPav: return "pav";
    case Rule::kSnw: return "snw";
    case Rule::kGpav: return "gpav";
  }
  return "unknown";
}

inline Rule ParseRule(const std::string& s) {
  if (s == "pav") return Rule::kPav;
  if (s == "snw") return Rule::kSnw;
  if (s == "gpav") return Rule::kGpav;
  throw FormatError("unknown rule '" + s + "'");
}

// Interpolated harmonic number: H(floor x) + (x - floor x) / ceil x.
inline Rational Phi(const Rational& x) {
  if (x < 0) throw RuleMismatchError("gpav needs nonnegative utilities");
  Integer f = Floor(x);
  Rational frac = x - Rational(f);
  Rational h = Harmonic(f.get_ui());
  if (frac == 0) return h;
  return h + frac / Rational(f + 1);
}

// Per-voter contribution to the score (pav, gpav) or to the product (snw).
inline Surd VoterTerm(Rule rule, const Surd& u) {
  switch (rule) {
    case Rule::kPav:
      if (!u.IsInteger() || u.Sign() < 0) {
        throw RuleMismatchError("pav needs nonnegative integer utilities, got " + u.ToString());
      }
      return Surd(Harmonic(u.ToRational().get_num().get_ui()));
    case Rule::kSnw:
      return Surd(1) + u;
    case Rule::kGpav:
      if (!u.IsRational()) throw RuleMismatchError("gpav needs rational utilities, got " + u.ToString());
      return Surd(Phi(u.ToRational()));
  }
  return Surd();
}

// A score that compares exactly within one rule. For snw the value is the
// product of (1 + u_i), which orders committees like the sum of logs.
struct Score {
  Rule rule = Rule::kSnw;
  Surd value;

  friend bool operator==(const Score& x, const Score& y) { return x.rule == y.rule && x.value == y.value; }
  friend bool operator<(const Score& x, const Score& y) {
    if (x.rule != y.rule) throw RuleMismatchError("comparing scores of different rules");
    return x.value < y.value;
  }

  // Sum of ln(1 + u_i) for snw, the value itself otherwise. Display only.
  double Display() const { return rule == Rule::kSnw ? std::log(value.ToDouble()) : value.ToDouble(); }
};

inline Score ScoreOfValues(Rule rule, const std::vector<Surd>& values) {
  Surd total = rule == Rule::kSnw ? Surd(1) : Surd(0);
  for (const auto& u : values) {
    if (rule == Rule::kSnw) total *= VoterTerm(rule, u);
    else total += VoterTerm(rule, u);
  }
  return Score{rule, total};
}

inline Score ScoreCommittee(Rule rule, const Instance& inst, const Committee& w) {
  return ScoreOfValues(rule, inst.Values(w));
}

// Per-voter and total marginals. For pav and gpav these are differences;
// for snw they are ratios of the (1 + u) factors and of the products.
struct Marginal {
  Rule rule = Rule::kSnw;
  std::vector<Surd> per_voter;
  Surd total;
};

namespace scoring_internal {

inline Marginal Between(Rule rule, const std::vector<Surd>& before, const std::vector<Surd>& after) {
  Marginal m{rule, {}, rule == Rule::kSnw ? Surd(1) : Surd(0)};
  for (size_t i = 0; i < before.size(); ++i) {
    Surd b = VoterTerm(rule, before[i]);
    Surd a = VoterTerm(rule, after[i]);
    if (rule == Rule::kSnw) {
      m.per_voter.push_back(a / b);
      m.total *= m.per_voter.back();
    } else {
      m.per_voter.push_back(a - b);
      m.total += m.per_voter.back();
    }
  }
  return m;
}

}  // namespace scoring_internal

// Gain from adding c to W.
inline Marginal MarginalAdd(Rule rule, const Instance& inst, const Committee& w, int c) {
  if (Contains(w, c)) throw ParameterError("candidate " + std::to_string(c) + " already in W");
  return scoring_internal::Between(rule, inst.Values(w), inst.Values(With(w, c)));
}

// Loss from removing c from W: score(W) - score(W \ c), or the ratio for snw.
inline Marginal MarginalRemove(Rule rule, const Instance& inst, const Committee& w, int c) {
  if (!Contains(w, c)) throw ParameterError("candidate " + std::to_string(c) + " not in W");
  return scoring_internal::Between(rule, inst.Values(Without(w, c)), inst.Values(w));
}

// Sum over i in S of u_i(c) / (u_i(W) + 1). Additive utilities only.
inline Rational DeltaStar(const Instance& inst, const Committee& w, int c, const std::vector<int>& voters) {
  Rational total = 0;
  for (int i : voters) {
    const Utility& u = inst.utility(i);
    if (!u.IsAdditiveLike()) throw RuleMismatchError("delta-star needs additive utilities");
    total += u.Weight(c) / (u.Evaluate(w).ToRational() + 1);
  }
  return total;
}

}  // namespace nashcore

#endif  // NASHCORE_SCORING_H_
