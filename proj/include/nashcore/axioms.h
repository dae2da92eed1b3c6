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

#ifndef NASHCORE_AXIOMS_H_
#define NASHCORE_AXIOMS_H_

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nashcore/committee.h"
#include "nashcore/errors.h"
#include "nashcore/random.h"
#include "nashcore/surd.h"
#include "nashcore/utility.h"

namespace nashcore {

struct AxiomOptions {
  int exhaustive_limit = 20;
  // Random (T, j) probes used when the universe exceeds the limit. Zero
  // means "raise EnumerationLimitError instead".
  std::uint64_t sample_budget = 0;
  std::uint64_t seed = 0;
};

// A set T and an element j of T.
struct SetElementWitness {
  Committee t;
  int j = -1;
};

struct AxiomReport {
  bool monotone = true;
  std::optional<SetElementWitness> monotone_witness;
  bool lipschitz = true;
  std::optional<SetElementWitness> lipschitz_witness;
  bool exhaustive = true;
  std::uint64_t pairs_checked = 0;
};

struct SubmodularWitness {
  Committee t1;
  Committee t2;
  int j = -1;
};

struct SubmodularReport {
  bool submodular = true;
  std::optional<SubmodularWitness> witness;
  bool exhaustive = true;
};

namespace internal {

inline void CheckUniverseSize(const Committee& universe, const AxiomOptions& opts) {
  if (static_cast<int>(universe.size()) > opts.exhaustive_limit || universe.size() > 30) {
    throw EnumerationLimitError("universe of " + std::to_string(universe.size()) +
                                " candidates exceeds the exhaustive limit of " +
                                std::to_string(opts.exhaustive_limit));
  }
}

// u on every subset of the universe, indexed by local mask.
inline std::vector<Surd> TabulateSubsets(const Utility& u, const Committee& universe) {
  std::size_t n = universe.size();
  std::vector<Surd> values(std::size_t{1} << n);
  for (std::size_t mask = 0; mask < values.size(); ++mask) {
    values[mask] = u.Evaluate(FromLocalMask(mask, universe));
  }
  return values;
}

}  // namespace internal

// Exhaustively tests u(T \ j) <= u(T) and u(T) - u(T \ j) <= 1 over all
// T ⊆ universe and j ∈ T. Witnesses are the first violation in mask order.
inline AxiomReport CheckAxioms(const Utility& u, Committee universe, const AxiomOptions& opts = {}) {
  universe = Normalized(std::move(universe));
  AxiomReport report;
  if (static_cast<int>(universe.size()) > opts.exhaustive_limit) {
    if (opts.sample_budget == 0) internal::CheckUniverseSize(universe, opts);
    report.exhaustive = false;
    Rng rng(opts.seed);
    for (std::uint64_t s = 0; s < opts.sample_budget; ++s) {
      Committee t;
      for (int x : universe) {
        if (rng.Coin()) t.push_back(x);
      }
      if (t.empty()) continue;
      int j = t[rng.Below(t.size())];
      Surd full = u.Evaluate(t);
      Surd less = u.Evaluate(Without(t, j));
      ++report.pairs_checked;
      if (report.monotone && less > full) {
        report.monotone = false;
        report.monotone_witness = SetElementWitness{t, j};
      }
      if (report.lipschitz && full - less > Surd(1)) {
        report.lipschitz = false;
        report.lipschitz_witness = SetElementWitness{t, j};
      }
    }
    return report;
  }
  std::vector<Surd> values = internal::TabulateSubsets(u, universe);
  const Surd one(1);
  for (std::size_t mask = 1; mask < values.size(); ++mask) {
    for (Mask rest = mask; rest; rest &= rest - 1) {
      int bit = std::countr_zero(rest);
      const Surd& less = values[mask & ~(std::size_t{1} << bit)];
      ++report.pairs_checked;
      if (report.monotone && less > values[mask]) {
        report.monotone = false;
        report.monotone_witness = SetElementWitness{FromLocalMask(mask, universe), universe[bit]};
      }
      if (report.lipschitz && values[mask] - less > one) {
        report.lipschitz = false;
        report.lipschitz_witness = SetElementWitness{FromLocalMask(mask, universe), universe[bit]};
      }
    }
    if (!report.monotone && !report.lipschitz) break;
  }
  return report;
}

// Smallest beta with sum_{j in T} (u(T) - u(T \ j)) <= beta * u(T) for all
// T ⊆ universe. Returns 0 when u vanishes on the whole universe.
inline Surd SelfBoundingConstant(const Utility& u, Committee universe, const AxiomOptions& opts = {}) {
  universe = Normalized(std::move(universe));
  internal::CheckUniverseSize(universe, opts);
  std::vector<Surd> values = internal::TabulateSubsets(u, universe);
  Surd best(0);
  for (std::size_t mask = 1; mask < values.size(); ++mask) {
    if (values[mask].Sign() <= 0) continue;
    Surd total(0);
    for (Mask rest = mask; rest; rest &= rest - 1) {
      total += values[mask] - values[mask & ~(std::size_t{1} << std::countr_zero(rest))];
    }
    Surd ratio = total / values[mask];
    if (ratio > best) best = ratio;
  }
  return best;
}

// Decreasing marginals: u(T1) - u(T1 \ j) >= u(T2) - u(T2 \ j) whenever
// j ∈ T1 ⊆ T2. Small universes check every triple; larger ones use the
// equivalent pairwise form on (T, a, b).
inline SubmodularReport CheckSubmodular(const Utility& u, Committee universe,
                                        const AxiomOptions& opts = {}) {
  universe = Normalized(std::move(universe));
  internal::CheckUniverseSize(universe, opts);
  std::vector<Surd> values = internal::TabulateSubsets(u, universe);
  SubmodularReport report;
  std::size_t n = universe.size();
  auto bit = [](int i) { return std::size_t{1} << i; };
  if (n <= 12) {
    for (std::size_t t2 = 1; t2 < values.size(); ++t2) {
      for (std::size_t t1 = t2;; t1 = (t1 - 1) & t2) {
        for (std::size_t rest = t1; rest; rest &= rest - 1) {
          int j = std::countr_zero(rest);
          Surd m1 = values[t1] - values[t1 & ~bit(j)];
          Surd m2 = values[t2] - values[t2 & ~bit(j)];
          if (m1 < m2) {
            report.submodular = false;
            report.witness = SubmodularWitness{FromLocalMask(t1, universe),
                                               FromLocalMask(t2, universe), universe[j]};
            return report;
          }
        }
        if (t1 == 0) break;
      }
    }
    return report;
  }
  for (std::size_t t = 0; t < values.size(); ++t) {
    for (std::size_t a = 0; a < n; ++a) {
      if (t & bit(a)) continue;
      for (std::size_t b = a + 1; b < n; ++b) {
        if (t & bit(b)) continue;
        Surd lhs = values[t | bit(a)] - values[t];
        Surd rhs = values[t | bit(a) | bit(b)] - values[t | bit(b)];
        if (lhs < rhs) {
          report.submodular = false;
          report.witness = SubmodularWitness{FromLocalMask(t | bit(a), universe),
                                             FromLocalMask(t | bit(a) | bit(b), universe),
                                             universe[a]};
          return report;
        }
      }
    }
  }
  return report;
}

}  // namespace nashcore

#endif  // NASHCORE_AXIOMS_H_
