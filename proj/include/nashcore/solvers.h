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

#ifndef NASHCORE_SOLVERS_H_
#define NASHCORE_SOLVERS_H_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "nashcore/committee.h"
#include "nashcore/errors.h"
#include "nashcore/feasibility.h"
#include "nashcore/instance.h"
#include "nashcore/interval.h"
#include "nashcore/random.h"
#include "nashcore/scoring.h"

namespace nashcore {

enum class Method { kGlobal, kLocal };

struct SolverConfig {
  Rule rule = Rule::kSnw;
  Method method = Method::kGlobal;
  // Local stops once no swap gains more than epsilon / (n k).
  std::optional<Rational> epsilon;
  std::optional<Committee> start;
  std::uint64_t seed = 0;
  std::uint64_t enumeration_cap = kDefaultSubsetCap;
  long max_iterations = 10'000'000;
};

struct SolveResult {
  Committee committee;
  Score score;
  long iterations = 0;
};

// Exact maximizer of the rule's score over P; ties go to the
// lexicographically smallest committee.
inline SolveResult SolveGlobal(const Instance& inst, Rule rule,
                               std::uint64_t cap = kDefaultSubsetCap) {
  std::optional<SolveResult> best;
  long visited = 0;
  inst.family().ForEachFeasible([&](const Committee& t) {
    ++visited;
    if (!inst.IsFeasible(t)) return true;
    Score s = ScoreCommittee(rule, inst, t);
    if (!best || best->score < s || (s == best->score && t < best->committee)) {
      best = SolveResult{t, s, 0};
    }
    return true;
  }, cap);
  if (!best) throw EmptyFamilyError("the feasible family is empty");
  best->iterations = visited;
  return *best;
}

namespace solver_internal {

// True when moving from `from` to `to` counts as an improvement under the
// threshold. For snw the gain is ln(to) - ln(from); a threshold comparison
// that the interval cannot decide counts as no improvement.
inline bool Improves(const Score& from, const Score& to, const Rational& threshold) {
  if (threshold == 0) return from < to;
  if (from.rule != Rule::kSnw) return to.value - from.value > Surd(threshold);
  if (!(from < to)) return false;
  Interval gain = Log(Interval(to.value) / Interval(from.value));
  return CertainlyLess(Interval(threshold), gain);
}

inline void RequireLocalFamily(const Instance& inst) {
  if (!inst.k_mode()) throw ModeError("Local runs on k-mode instances");
  if (!inst.family().IsMatroid()) {
    throw UnsupportedConstraintError(std::string("Local needs a matroid family, got ") +
                                     ConstraintKindName(inst.family().kind()));
  }
}

}  // namespace solver_internal

// First improving basis-preserving swap of W in scan order (outgoing id
// ascending, then incoming id ascending), if any.
inline std::optional<std::pair<int, int>> FindImprovingSwap(const Instance& inst, Rule rule,
                                                            const Committee& w,
                                                            const Rational& epsilon = 0) {
  Rational threshold = epsilon / Rational(static_cast<long>(inst.n()) * std::max(1, inst.k()));
  Score current = ScoreCommittee(rule, inst, w);
  for (int out : w) {
    for (int in = 0; in < inst.m(); ++in) {
      if (Contains(w, in)) continue;
      Committee next = Swap(w, out, in);
      if (!inst.family().IsFeasible(next)) continue;
      if (solver_internal::Improves(current, ScoreCommittee(rule, inst, next), threshold)) {
        return std::make_pair(out, in);
      }
    }
  }
  return std::nullopt;
}

inline SolveResult SolveLocal(const Instance& inst, const SolverConfig& config) {
  solver_internal::RequireLocalFamily(inst);
  Rational epsilon = config.epsilon.value_or(Rational(0));
  if (epsilon < 0) throw ParameterError("epsilon must be nonnegative");
  Committee w = config.start ? Normalized(*config.start) : GreedyBasis(inst.family());
  if (!IsBasis(inst.family(), w)) throw NotABasisError("start " + FormatCommittee(w) + " is not a basis");
  long iterations = 0;
  while (auto swap = FindImprovingSwap(inst, config.rule, w, epsilon)) {
    w = Swap(w, swap->first, swap->second);
    if (++iterations >= config.max_iterations) throw EnumerationLimitError("Local exceeded its iteration budget");
  }
  return SolveResult{w, ScoreCommittee(config.rule, inst, w), iterations};
}

inline SolveResult Solve(const Instance& inst, const SolverConfig& config) {
  if (config.method == Method::kGlobal) return SolveGlobal(inst, config.rule, config.enumeration_cap);
  return SolveLocal(inst, config);
}

// The greedy basis followed by `count` random bases drawn from seed-derived
// streams. Used to run Local from several starting points.
inline std::vector<Committee> LocalStarts(const FeasibilityFamily& family, std::uint64_t seed, int count) {
  std::vector<Committee> starts{GreedyBasis(family)};
  Rng base(seed);
  for (int s = 0; s < count; ++s) {
    Rng rng = base.Split(static_cast<std::uint64_t>(s));
    starts.push_back(RandomBasis(family, rng));
  }
  return starts;
}

}  // namespace nashcore

#endif  // NASHCORE_SOLVERS_H_
