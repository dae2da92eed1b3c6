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

#ifndef NASHCORE_LEMMAS_H_
#define NASHCORE_LEMMAS_H_

#include <string>
#include <vector>

#include "nashcore/committee.h"
#include "nashcore/instance.h"
#include "nashcore/interval.h"
#include "nashcore/rational.h"
#include "nashcore/scoring.h"
#include "nashcore/solvers.h"
#include "nashcore/surd.h"

namespace nashcore {

// Outcome of checking one inequality on one input. `holds` is only set when
// the inequality is decided: exactly, or by intervals that do not overlap.
struct LemmaCheck {
  bool premise = false;
  bool holds = false;
  bool straddle = false;  // the intervals overlapped, so nothing was decided
  std::string detail;
};

namespace lemma_internal {

inline LemmaCheck Decide(const Interval& lhs, const Interval& rhs, bool strict) {
  LemmaCheck out;
  out.premise = true;
  if (strict ? CertainlyLess(lhs, rhs) : CertainlyLessEq(lhs, rhs)) {
    out.holds = true;
  } else if (CertainlyLess(rhs, lhs)) {
    out.detail = "violated: " + lhs.ToString() + " vs " + rhs.ToString();
  } else {
    out.straddle = true;
    out.detail = "undecided: " + lhs.ToString() + " vs " + rhs.ToString();
  }
  return out;
}

}  // namespace lemma_internal

// ln(1 + u(W)) - ln(1 + u(W \ j)) <= (u(W) - u(W \ j)) / u(W) for u(W) > 0.
inline LemmaCheck CheckSmoothedLog(const Surd& with, const Surd& without) {
  LemmaCheck out;
  if (with.Sign() <= 0 || without > with || with - without > Surd(1)) return out;
  if ((with - without).Sign() == 0) {
    out.premise = true;
    out.holds = true;
    return out;
  }
  Interval lhs = Log(Interval(Surd(1) + with) / Interval(Surd(1) + without));
  Interval rhs = Interval((with - without) / with);
  return lemma_internal::Decide(lhs, rhs, false);
}

inline LemmaCheck CheckSmoothedLog(const Instance& inst, const Committee& w, int voter, int j) {
  return CheckSmoothedLog(inst.Value(voter, w), inst.Value(voter, Without(w, j)));
}

// Sum over c in W of the gpav removal marginals of one voter is at most 1.
inline LemmaCheck CheckNabla(const Instance& inst, const Committee& w, int voter) {
  LemmaCheck out;
  const Utility& u = inst.utility(voter);
  if (!u.IsAdditiveLike()) return out;
  out.premise = true;
  Rational total = 0;
  Rational phi_w = Phi(u.Evaluate(w).ToRational());
  for (int c : w) total += phi_w - Phi(u.Evaluate(Without(w, c)).ToRational());
  out.holds = total <= 1;
  if (!out.holds) out.detail = "sum " + ToString(total);
  return out;
}

// delta*_{i,c}(W) is at most the gpav marginal of c for voter i: the gain
// for c outside W, the loss for c inside W.
inline LemmaCheck Check2Abc(const Instance& inst, const Committee& w, int voter, int c) {
  LemmaCheck out;
  const Utility& u = inst.utility(voter);
  if (!u.IsAdditiveLike()) return out;
  out.premise = true;
  Rational uw = u.Evaluate(w).ToRational();
  Rational star = u.Weight(c) / (uw + 1);
  Rational marginal = Contains(w, c) ? Phi(uw) - Phi(u.Evaluate(Without(w, c)).ToRational())
                                     : Phi(u.Evaluate(With(w, c)).ToRational()) - Phi(uw);
  out.holds = star <= marginal;
  if (!out.holds) out.detail = ToString(star) + " > " + ToString(marginal);
  return out;
}

// For |W| = k: the snw removal losses over c in W sum to at most n, i.e.
// the product of the ratios is at most e^n.
inline LemmaCheck CheckMatNabla(const Instance& inst, const Committee& w) {
  LemmaCheck out;
  if (!inst.k_mode() || static_cast<int>(w.size()) != inst.k()) return out;
  Surd product(1);
  for (int c : w) {
    Marginal m = MarginalRemove(Rule::kSnw, inst, w, c);
    product *= m.total;
  }
  return lemma_internal::Decide(Log(Interval(product)), Interval(static_cast<long>(inst.n())), false);
}

// For T disjoint from W with u_i(T ∪ W) >= 2 (u_i(W) + 1) for all i in S:
// the snw gains over c in T sum to more than |S|.
inline LemmaCheck CheckMatDelta(const Instance& inst, const Committee& w, const std::vector<int>& s,
                                const Committee& t) {
  LemmaCheck out;
  if (s.empty() || t.empty() || !Intersection(t, w).empty()) return out;
  Committee joint = Union(t, w);
  for (int i : s) {
    if (inst.Value(i, joint) < Surd(2) * (inst.Value(i, w) + Surd(1))) return out;
  }
  Surd product(1);
  for (int c : t) product *= MarginalAdd(Rule::kSnw, inst, w, c).total;
  return lemma_internal::Decide(Interval(static_cast<long>(s.size())), Log(Interval(product)), true);
}

struct M2Values {
  Rational m1, m2, rhs, alpha, beta;
};

// For W a gpav local optimum of size k, |T| <= alpha k with alpha = |S| / n
// and beta = |T ∩ W| / k < 1: M2* <= (alpha - beta) / (1 - beta) (n - M1*).
inline LemmaCheck CheckM2(const Instance& inst, const Committee& w, const std::vector<int>& s, const Committee& t,
                          M2Values* values = nullptr) {
  LemmaCheck out;
  if (!inst.k_mode() || s.empty() || static_cast<int>(w.size()) != inst.k()) return out;
  for (int i = 0; i < inst.n(); ++i) {
    if (!inst.utility(i).IsAdditiveLike()) return out;
  }
  int k = inst.k();
  Rational alpha = MakeRational(static_cast<long>(s.size()), inst.n());
  if (Rational(static_cast<long>(t.size())) > alpha * k) return out;
  Committee inside = Intersection(t, w);
  Rational beta = MakeRational(static_cast<long>(inside.size()), k);
  if (beta >= 1) return out;
  if (FindImprovingSwap(inst, Rule::kGpav, w)) return out;
  out.premise = true;
  M2Values v;
  v.alpha = alpha;
  v.beta = beta;
  for (int c : t) {
    Rational d = DeltaStar(inst, w, c, s);
    if (Contains(w, c)) v.m1 += d;
    else v.m2 += d;
  }
  v.rhs = (alpha - beta) / (1 - beta) * (Rational(inst.n()) - v.m1);
  out.holds = v.m2 <= v.rhs;
  if (!out.holds) out.detail = ToString(v.m2) + " > " + ToString(v.rhs);
  if (values) *values = v;
  return out;
}

}  // namespace nashcore

#endif  // NASHCORE_LEMMAS_H_
