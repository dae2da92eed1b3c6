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

// Naive reference deciders. Each one loops over every coalition and every
// subset of candidates and tests the definition literally, using only the
// instance's value oracle, feasibility test and costs. They share no code
// with the library's verifiers and are meant for instances with a handful
// of voters and candidates.

#ifndef NASHCORE_TESTS_ORACLES_H_
#define NASHCORE_TESTS_ORACLES_H_

#include <algorithm>
#include <vector>

#include "nashcore/instance.h"
#include "nashcore/rational.h"
#include "nashcore/surd.h"

namespace oracle {

using nashcore::Committee;
using nashcore::Instance;
using nashcore::Rational;
using nashcore::Surd;

inline Committee Bits(unsigned mask) {
  Committee c;
  for (int j = 0; mask; ++j, mask >>= 1) {
    if (mask & 1) c.push_back(j);
  }
  return c;
}

inline std::vector<int> Members(unsigned mask) {
  std::vector<int> out;
  for (int i = 0; mask; ++i, mask >>= 1) {
    if (mask & 1) out.push_back(i);
  }
  return out;
}

inline int Count(unsigned mask) { return __builtin_popcount(mask); }

inline bool Approves(const Instance& inst, int i, int j) {
  for (int x : inst.utility(i).approved()) {
    if (x == j) return true;
  }
  return false;
}

inline bool Reaches(const Instance& inst, const Committee& w, const Rational& gamma, const std::vector<int>& s,
                    const Committee& t) {
  for (int i : s) {
    if (inst.Value(i, t) < Surd(gamma) * (inst.Value(i, w) + Surd(1))) return false;
  }
  return true;
}

// Some S with |S| >= min_size and T with |T| <= |S| k / n block W.
inline bool CoreBlocked(const Instance& inst, const Committee& w, const Rational& gamma, int min_size = 1) {
  const int n = inst.n(), m = inst.m(), k = inst.k();
  for (unsigned sm = 1; sm < (1u << n); ++sm) {
    if (Count(sm) < min_size) continue;
    for (unsigned tm = 0; tm < (1u << m); ++tm) {
      if (Count(tm) * n > Count(sm) * k) continue;
      if (Reaches(inst, w, gamma, Members(sm), Bits(tm))) return true;
    }
  }
  return false;
}

// Shared quantifier structure of the restrained notions: S blocks iff there
// is at least one admissible hat and every admissible hat has a feasible
// completion T (|T \ hat| <= k') for which good(S, T) holds.
template <typename Good>
bool RestrainedBlocked(const Instance& inst, const Committee& w, bool any_hat, const Good& good) {
  const int n = inst.n(), m = inst.m(), k = inst.k();
  std::vector<unsigned> feasible;
  for (unsigned f = 0; f < (1u << m); ++f) {
    if (inst.family().IsFeasible(Bits(f))) feasible.push_back(f);
  }
  unsigned wmask = 0;
  for (int j : w) wmask |= 1u << j;
  for (unsigned sm = 1; sm < (1u << n); ++sm) {
    std::vector<int> s = Members(sm);
    int kp = Count(sm) * k / n;
    bool some_hat = false, every_hat = true;
    for (unsigned hat = 0; hat < (1u << m) && every_hat; ++hat) {
      if (!any_hat && (hat & ~wmask)) continue;
      if (Count(hat) > k - kp) continue;
      bool completable = false, answered = false;
      for (unsigned f : feasible) {
        if ((f & hat) != hat || Count(f & ~hat) > kp) continue;
        completable = true;
        if (good(s, Bits(f))) {
          answered = true;
          break;
        }
      }
      if (!completable) continue;
      some_hat = true;
      every_hat = answered;
    }
    if (some_hat && every_hat) return true;
  }
  return false;
}

inline bool RestrainedCoreBlocked(const Instance& inst, const Committee& w, const Rational& gamma, bool any_hat) {
  return RestrainedBlocked(inst, w, any_hat, [&](const std::vector<int>& s, const Committee& t) {
    return Reaches(inst, w, gamma, s, t);
  });
}

// Approval utilities: |common approvals of S inside T| >= max u_i(W) + 1.
inline bool RestrainedEjrBlocked(const Instance& inst, const Committee& w, bool any_hat) {
  return RestrainedBlocked(inst, w, any_hat, [&](const std::vector<int>& s, const Committee& t) {
    long need = 0;
    for (int i : s) {
      long ui = 0;
      for (int j : w) ui += Approves(inst, i, j) ? 1 : 0;
      need = std::max(need, ui + 1);
    }
    long common = 0;
    for (int j : t) {
      bool all = true;
      for (int i : s) all = all && Approves(inst, i, j);
      common += all ? 1 : 0;
    }
    return common >= need;
  });
}

// Budget mode: Cost(T) <= |S| b / n and u_i(T) >= gamma (u_i(W) + 1).
inline bool PbCoreBlocked(const Instance& inst, const Committee& w, const Rational& gamma) {
  const int n = inst.n(), m = inst.m();
  for (unsigned sm = 1; sm < (1u << n); ++sm) {
    for (unsigned tm = 0; tm < (1u << m); ++tm) {
      Committee t = Bits(tm);
      if (inst.Cost(t) * n > Rational(Count(sm)) * inst.budget()) continue;
      if (Reaches(inst, w, gamma, Members(sm), t)) return true;
    }
  }
  return false;
}

// Budget mode: Cost(T) <= |S| b / (theta n) and every member gains
// (strictly, or weakly when `weak`).
inline bool EndowmentBlocked(const Instance& inst, const Committee& w, const Rational& theta, bool weak) {
  const int n = inst.n(), m = inst.m();
  for (unsigned sm = 1; sm < (1u << n); ++sm) {
    for (unsigned tm = 0; tm < (1u << m); ++tm) {
      Committee t = Bits(tm);
      if (inst.Cost(t) * theta * n > Rational(Count(sm)) * inst.budget()) continue;
      bool all = true;
      for (int i : Members(sm)) {
        Surd a = inst.Value(i, t), b = inst.Value(i, w);
        all = all && (weak ? a >= b : a > b);
      }
      if (all) return true;
    }
  }
  return false;
}

}  // namespace oracle

#endif  // NASHCORE_TESTS_ORACLES_H_
