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

#ifndef NASHCORE_SAMPLING_H_
#define NASHCORE_SAMPLING_H_

#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nashcore/axioms.h"
#include "nashcore/committee.h"
#include "nashcore/errors.h"
#include "nashcore/instance.h"
#include "nashcore/interval.h"
#include "nashcore/parallel.h"
#include "nashcore/random.h"
#include "nashcore/rational.h"
#include "nashcore/surd.h"
#include "nashcore/utility.h"
#include "nashcore/verifiers.h"

namespace nashcore {

inline constexpr int kExactSampleLimit = 16;
inline constexpr long kTrialBlock = 1024;
inline constexpr long kConclusiveTrials = 100;

// E[u(O)] where O keeps each member of T independently with probability
// alpha, by summing over all subsets of T.
inline Surd ExactSampleExpectation(const Utility& u, const Committee& t_in, const Rational& alpha) {
  Committee t = Normalized(t_in);
  if (static_cast<int>(t.size()) > kExactSampleLimit) {
    throw EnumerationLimitError("exact expectation needs |T| <= " + std::to_string(kExactSampleLimit));
  }
  if (alpha < 0 || alpha > 1) throw ParameterError("alpha must lie in [0, 1]");
  int size = static_cast<int>(t.size());
  std::vector<Rational> pa(size + 1, Rational(1)), pb(size + 1, Rational(1));
  for (int i = 1; i <= size; ++i) {
    pa[i] = pa[i - 1] * alpha;
    pb[i] = pb[i - 1] * (1 - alpha);
  }
  Surd total;
  for (Mask m = 0; m < (Mask{1} << size); ++m) {
    int chosen = std::popcount(m);
    Rational weight = pa[chosen] * pb[size - chosen];
    if (weight == 0) continue;
    total += Surd(weight) * u.Evaluate(FromLocalMask(m, t));
  }
  return total;
}

struct SamplingBoundReport {
  Surd expectation;
  Surd bound;                   // alpha^beta u(T)
  Surd self_bounding_constant;  // of u on subsets of T
  bool premise = false;         // self-bounding constant <= beta
  bool holds = false;
};

// E[u(O)] >= alpha^beta u(T), checked exactly after confirming that u is
// beta-self-bounding on the subsets of T.
inline SamplingBoundReport VerifySamplingBound(const Utility& u, const Committee& t, const Rational& alpha, int beta) {
  if (beta < 1) throw ParameterError("beta must be a positive integer");
  SamplingBoundReport rep;
  rep.self_bounding_constant = SelfBoundingConstant(u, Normalized(t));
  rep.premise = rep.self_bounding_constant <= Surd(beta);
  rep.expectation = ExactSampleExpectation(u, t, alpha);
  rep.bound = Surd(Pow(alpha, static_cast<unsigned long>(beta))) * u.Evaluate(Normalized(t));
  rep.holds = rep.premise && rep.bound <= rep.expectation;
  return rep;
}

// One independent sample of T at rate alpha.
inline Committee SampleSubset(Rng& rng, const Committee& t, const Rational& alpha) {
  Committee o;
  for (int j : t) {
    if (rng.Bernoulli(alpha)) o.push_back(j);
  }
  return o;
}

// Runs `trials` trials split into fixed blocks, each block drawing from its
// own stream derived from the seed, so the outcome does not depend on jobs.
template <typename Trial>
long CountHits(long trials, std::uint64_t seed, int jobs, const Trial& trial) {
  long blocks = (trials + kTrialBlock - 1) / kTrialBlock;
  std::vector<long> hits(blocks, 0);
  ParallelFor(static_cast<std::size_t>(blocks), jobs, [&](std::size_t b) {
    Rng rng = Rng(seed).Split(static_cast<std::uint64_t>(b));
    long begin = static_cast<long>(b) * kTrialBlock;
    long end = std::min(trials, begin + kTrialBlock);
    for (long i = begin; i < end; ++i) hits[b] += trial(rng) ? 1 : 0;
  });
  long total = 0;
  for (long h : hits) total += h;
  return total;
}

enum class TailVerdict { kPass, kFail, kInconclusive };

inline const char* TailVerdictName(TailVerdict v) {
  switch (v) {
    case TailVerdict::kPass: return "pass";
    case TailVerdict::kFail: return "fail";
    case TailVerdict::kInconclusive: return "inconclusive";
  }
  return "?";
}

struct LowerTailReport {
  Surd mu0;
  bool mu0_exact = true;
  double mu0_stderr = 0;     // Monte-Carlo estimate only
  Surd threshold;            // (1 - delta) mu0
  long trials = 0;
  long hits = 0;             // trials with u(O) <= threshold
  Rational frequency;
  Interval bound{0L};        // exp(-delta^2 mu0 / (2 beta))
  Interval allowance{0L};    // bound + 3 sqrt(bound (1 - bound) / trials)
  TailVerdict verdict = TailVerdict::kInconclusive;
  std::uint64_t seed = 0;
};

inline LowerTailReport McLowerTail(const Utility& u, const Committee& t_in, const Rational& alpha,
                                   const Rational& delta, int beta, long trials, std::uint64_t seed, int jobs = 1) {
  if (alpha <= 0 || alpha > 1) throw ParameterError("alpha must lie in (0, 1]");
  if (delta < 0 || delta >= 1) throw ParameterError("delta must lie in [0, 1)");
  if (beta < 1) throw ParameterError("beta must be a positive integer");
  if (trials < 1) throw ParameterError("trials must be positive");
  Committee t = Normalized(t_in);
  LowerTailReport rep;
  rep.seed = seed;
  rep.trials = trials;
  if (static_cast<int>(t.size()) <= kExactSampleLimit) {
    rep.mu0 = ExactSampleExpectation(u, t, alpha);
  } else {
    // Estimate the mean from a stream disjoint from the tail trials.
    rep.mu0_exact = false;
    long n = std::max<long>(trials, 1000);
    std::vector<double> values(n);
    Rng est = Rng(seed).Split(~std::uint64_t{0});
    Rational sum = 0;
    double sq = 0;
    for (long i = 0; i < n; ++i) {
      Surd v = u.Evaluate(SampleSubset(est, t, alpha));
      if (!v.IsRational()) throw RuleMismatchError("Monte-Carlo mean needs rational utilities");
      sum += v.ToRational();
      values[i] = v.ToDouble();
    }
    rep.mu0 = Surd(sum / n);
    double mean = rep.mu0.ToDouble();
    for (double v : values) sq += (v - mean) * (v - mean);
    rep.mu0_stderr = std::sqrt(sq / static_cast<double>(n - 1) / static_cast<double>(n));
  }
  rep.threshold = Surd(1 - delta) * rep.mu0;
  rep.hits = CountHits(trials, seed, jobs, [&](Rng& rng) {
    return u.Evaluate(SampleSubset(rng, t, alpha)) <= rep.threshold;
  });
  rep.frequency = MakeRational(rep.hits, trials);
  rep.bound = Exp(Interval(0L) - Interval(delta * delta) * Interval(rep.mu0) / Interval(Rational(2 * beta)));
  Interval variance = rep.bound * (Interval(1L) - rep.bound) / Interval(Rational(trials));
  if (!CertainlyLessEq(Interval(0L), variance)) variance = Interval(0L);
  rep.allowance = rep.bound + Interval(3L) * Sqrt(variance);
  if (trials < kConclusiveTrials) {
    rep.verdict = TailVerdict::kInconclusive;
  } else {
    rep.verdict = CertainlyLessEq(Interval(rep.frequency), rep.allowance) ? TailVerdict::kPass : TailVerdict::kFail;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// The sampling step of the budget reduction, run on a concrete deviation.

struct Endow2Params {
  Rational kappa;
  Rational eta;
  Rational phi;  // coalition fraction |S| / n
  Rational q;
  int beta = 1;
  std::optional<long> gamma;  // default floor(32 kappa / q) + 1
  long trials = 10000;
  std::uint64_t seed = 0;
};

struct Endow2Report {
  bool premises = false;
  std::vector<std::string> unmet;
  long gamma = 0;
  Committee reduced;        // T'
  Rational small_size;      // (phi / gamma) b
  Rational cost_cap;        // b'' = (phi / gamma) kappa b
  long trials = 0;
  long coalition_hits = 0;  // |S'| >= q |S|
  long cost_hits = 0;       // Cost(O) <= b''
  long joint_hits = 0;
  std::optional<Committee> witness;         // first O meeting both events
  std::optional<std::vector<int>> witness_voters;
  bool witness_blocks = false;  // (S', O) blocks W at endowment factor 32
  std::uint64_t seed = 0;
};

inline Endow2Report Endow2Experiment(const Instance& inst, const Committee& w, const std::vector<int>& s,
                                     const Committee& t_in, const Endow2Params& p) {
  if (!inst.budget_mode()) throw ModeError("the reduction experiment needs a budget-mode instance");
  if (p.kappa <= 1 || p.eta <= 2) throw ParameterError("need kappa > 1 and eta > 2");
  if (p.q <= 0 || p.q >= 1) throw ParameterError("q must lie in (0, 1)");
  if (p.phi <= 0 || p.phi > 1) throw ParameterError("phi must lie in (0, 1]");
  if (s.empty()) throw ParameterError("the coalition must be nonempty");
  Committee t = Normalized(t_in);
  Endow2Report rep;
  rep.seed = p.seed;
  rep.trials = p.trials;
  rep.gamma = p.gamma ? *p.gamma : Floor(32 * p.kappa / p.q).get_si() + 1;
  if (rep.gamma < 1) throw ParameterError("gamma must be positive");
  const Rational b = inst.budget();
  const Rational g(rep.gamma);
  // Premises of the reduction.
  if (Rational(static_cast<long>(s.size())) != p.phi * inst.n()) rep.unmet.push_back("|S| != phi n");
  if (inst.Cost(t) > p.phi * b) rep.unmet.push_back("Cost(T) > phi b");
  if (!(p.q > 32 * p.kappa / g)) rep.unmet.push_back("q <= 32 kappa / gamma");
  Rational factor = p.eta * p.beta * Pow(g, static_cast<unsigned long>(p.beta));
  for (int i : s) {
    if (inst.Value(i, t) < Surd(factor) * (inst.Value(i, w) + Surd(1))) {
      rep.unmet.push_back("u_" + std::to_string(i) + "(T) below eta beta gamma^beta (u(W) + 1)");
    }
  }
  rep.premises = rep.unmet.empty();
  rep.small_size = p.phi / g * b;
  rep.cost_cap = rep.small_size * p.kappa;
  for (int j : t) {
    if (inst.sizes()[j] <= rep.small_size) rep.reduced.push_back(j);
  }
  if (!rep.premises) return rep;
  Rational rate = Rational(1) / g;
  std::vector<Surd> base;
  for (int i : s) base.push_back(inst.Value(i, w));
  Rational need = p.q * static_cast<long>(s.size());
  for (long trial = 0; trial < p.trials; ++trial) {
    Rng rng = Rng(p.seed).Split(static_cast<std::uint64_t>(trial));
    Committee o = SampleSubset(rng, rep.reduced, rate);
    std::vector<int> gained;
    for (size_t x = 0; x < s.size(); ++x) {
      if (inst.Value(s[x], o) > base[x]) gained.push_back(s[x]);
    }
    bool coalition = Rational(static_cast<long>(gained.size())) >= need;
    bool cost = inst.Cost(o) <= rep.cost_cap;
    rep.coalition_hits += coalition;
    rep.cost_hits += cost;
    if (coalition && cost) {
      ++rep.joint_hits;
      if (!rep.witness) {
        rep.witness = o;
        rep.witness_voters = gained;
      }
    }
  }
  if (rep.witness) {
    rep.witness_blocks = ReplayBudgetBlock(inst, w, Rational(32), Notion::kEndowmentCore, *rep.witness_voters,
                                           *rep.witness);
  }
  return rep;
}

// Budget-mode instance for the experiment: `voters` voters, each valuing
// every one of `m` unit-size candidates at 1; budget m.
inline Instance Endow2SyntheticInstance(int voters, int m) {
  std::vector<std::string> ids;
  for (int j = 0; j < m; ++j) ids.push_back("x" + std::to_string(j + 1));
  std::vector<Utility> utilities;
  for (int i = 0; i < voters; ++i) utilities.push_back(Utility::Additive(std::vector<Rational>(m, Rational(1))));
  return Instance::WithBudget(ids, std::move(utilities), FeasibilityFamily::Cardinality(m, m),
                              std::vector<Rational>(m, Rational(1)), Rational(m), AxiomPolicy::kTrust);
}

}  // namespace nashcore

#endif  // NASHCORE_SAMPLING_H_
