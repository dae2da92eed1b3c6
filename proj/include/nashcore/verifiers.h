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

// Brute-force decision procedures for the stability notions. Each returns a
// report whose failure witness can be replayed through the Replay*
// predicates at the bottom of this file.

#ifndef NASHCORE_VERIFIERS_H_
#define NASHCORE_VERIFIERS_H_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "nashcore/committee.h"
#include "nashcore/errors.h"
#include "nashcore/feasibility.h"
#include "nashcore/instance.h"
#include "nashcore/parallel.h"
#include "nashcore/rational.h"
#include "nashcore/surd.h"

namespace nashcore {

enum class Notion { kCore, kRestrainedCore, kRestrainedEjr, kEndowmentCore, kPbCore };

inline const char* NotionName(Notion n) {
  switch (n) {
    case Notion::kCore: return "core";
    case Notion::kRestrainedCore: return "restrained-core";
    case Notion::kRestrainedEjr: return "ejr";
    case Notion::kEndowmentCore: return "endowment";
    case Notion::kPbCore: return "pb-core";
  }
  return "unknown";
}

inline Notion ParseNotion(const std::string& s) {
  for (Notion n : {Notion::kCore, Notion::kRestrainedCore, Notion::kRestrainedEjr, Notion::kEndowmentCore,
                   Notion::kPbCore}) {
    if (s == NotionName(n)) return n;
  }
  throw FormatError("unknown notion '" + s + "'");
}

// Which partial committees the non-deviating voters may keep: subsets of W,
// or any committee of the right size that admits a completion.
enum class RestrainedMode { kSubsetOfW, kAnyHatW };

inline const char* RestrainedModeName(RestrainedMode m) {
  return m == RestrainedMode::kSubsetOfW ? "subsetW" : "anyW";
}

inline RestrainedMode ParseRestrainedMode(const std::string& s) {
  if (s == "subsetW") return RestrainedMode::kSubsetOfW;
  if (s == "anyW") return RestrainedMode::kAnyHatW;
  throw FormatError("unknown restrained mode '" + s + "'");
}

struct VerifyOptions {
  int jobs = 1;
  std::uint64_t cap = kDefaultSubsetCap;
  // Core only: ignore coalitions smaller than this.
  int min_coalition_size = 1;
  // Core, pb and endowment: only deviations T that are themselves in P.
  bool deviation_must_be_feasible = false;
  RestrainedMode mode = RestrainedMode::kSubsetOfW;
  // Endowment: use u_i(T) >= u_i(W) instead of the strict comparison.
  bool weak_endowment = false;
  // Endowment and pb: treat a k-mode instance as unit sizes with b = k.
  bool auto_lift = false;
  int max_voters = 10;
  int max_candidates = 14;
};

// For restrained notions: the committee kept by the other voters and the
// completion chosen by the coalition.
struct CertificateEntry {
  Committee hat_w;
  Committee w_prime;
};

struct VerificationReport {
  Notion notion = Notion::kCore;
  Rational parameter = 1;
  bool pass = true;
  std::vector<int> coalition;
  std::optional<Committee> deviation;
  int endowment = -1;
  std::vector<CertificateEntry> certificate;
  std::string mode;
  std::uint64_t sets_enumerated = 0;
  bool vacuous = false;
  long vacuous_coalitions = 0;
  bool degenerate_equality = false;
  std::vector<std::string> notes;
};

namespace verify_internal {

inline std::vector<int> MaskVoters(Mask s) {
  std::vector<int> out;
  for (Mask r = s; r; r &= r - 1) out.push_back(std::countr_zero(r));
  return out;
}

inline Mask VoterMask(const std::vector<int>& voters) {
  Mask m = 0;
  for (int i : voters) m |= Mask{1} << i;
  return m;
}

// gamma * (u_i(W) + 1) for every voter.
inline std::vector<Surd> Thresholds(const Instance& inst, const Committee& w, const Rational& gamma) {
  std::vector<Surd> out;
  for (const auto& u : inst.Values(w)) out.push_back(Surd(gamma) * (u + Surd(1)));
  return out;
}

inline Mask SatisfiedMask(const Instance& inst, Mask t, const std::vector<Surd>& threshold) {
  Mask s = 0;
  for (int i = 0; i < inst.n(); ++i) {
    if (inst.utility(i).EvaluateMask(t) >= threshold[i]) s |= Mask{1} << i;
  }
  return s;
}

// Visits subsets of {0..m-1} of size <= max_size in (size, lex) order,
// evaluating `eval` in parallel batches, and returns the first subset whose
// result satisfies `hit` together with that result.
template <typename R>
std::optional<std::pair<Committee, R>> FirstHit(int m, int max_size, int jobs, std::uint64_t* counter,
                                                const std::function<R(const Committee&)>& eval,
                                                const std::function<bool(const R&)>& hit) {
  constexpr std::size_t kBatch = 4096;
  std::vector<Committee> batch;
  std::optional<std::pair<Committee, R>> found;
  auto flush = [&]() {
    std::vector<R> results(batch.size());
    ParallelFor(batch.size(), jobs, [&](std::size_t i) { results[i] = eval(batch[i]); });
    for (std::size_t i = 0; i < batch.size(); ++i) {
      if (hit(results[i])) {
        found = std::make_pair(batch[i], results[i]);
        break;
      }
    }
    if (counter) *counter += batch.size();
    batch.clear();
    return !found;
  };
  ForEachSubsetBySize(m, max_size, [&](const Committee& t) {
    batch.push_back(t);
    if (batch.size() < kBatch) return true;
    return flush();
  });
  if (!found && !batch.empty()) flush();
  return found;
}

inline void CheckCap(int m, int max_size, std::uint64_t cap, const char* what) {
  if (BinomialCount(m, max_size) > static_cast<double>(cap)) {
    throw EnumerationLimitError(std::string(what) + ": " + std::to_string(m) + " candidates with size bound " +
                                std::to_string(max_size) + " exceed the subset cap of " + std::to_string(cap));
  }
}

inline void CheckRestrainedLimits(const Instance& inst, const VerifyOptions& opts) {
  if (!inst.k_mode()) throw ModeError("restrained notions need a k-mode instance");
  if (inst.n() > opts.max_voters || inst.n() > 20) {
    throw EnumerationLimitError("restrained notions support at most " + std::to_string(opts.max_voters) +
                                " voters, got " + std::to_string(inst.n()));
  }
  if (inst.m() > opts.max_candidates || inst.m() > 24) {
    throw EnumerationLimitError("restrained notions support at most " + std::to_string(opts.max_candidates) +
                                " candidates, got " + std::to_string(inst.m()));
  }
}

// Every feasible committee as a mask, in (size, lex) order.
inline std::vector<Mask> FeasibleMasks(const Instance& inst, std::uint64_t cap) {
  std::vector<Mask> out;
  inst.family().ForEachFeasible([&](const Committee& f) {
    out.push_back(ToMask(f));
    return true;
  }, cap);
  return out;
}

inline int Endowment(int s, int k, int n) { return static_cast<int>((static_cast<long>(s) * k) / n); }

// Calls visit(hat) for every hat ⊆ f (restricted to `allowed`) with
// |f \ hat| <= kp and |hat| <= k - kp.
inline void ForEachHat(Mask f, Mask allowed, int kp, int k, const std::function<void(Mask)>& visit) {
  Mask base = f & allowed;
  for (Mask hat = base;; hat = (hat - 1) & base) {
    if (std::popcount(f & ~hat) <= kp && std::popcount(hat) <= k - kp) visit(hat);
    if (hat == 0) break;
  }
}

inline std::vector<int> DistinctEndowments(int n, int k) {
  std::vector<int> out;
  for (int s = 1; s <= n; ++s) {
    int kp = Endowment(s, k, n);
    if (std::find(out.begin(), out.end(), kp) == out.end()) out.push_back(kp);
  }
  return out;
}

// Lexicographically preferred completion for a certificate: the feasible F
// containing hat whose satisfied set is largest, then the shortest and
// lexicographically smallest W' = F \ hat.
inline std::optional<Committee> ChooseCompletion(const std::vector<Mask>& feasible, const std::vector<Mask>& sat,
                                                 Mask hat, Mask allowed, int kp, int k,
                                                 const std::function<bool(std::size_t)>& good) {
  (void)allowed;
  std::optional<std::size_t> best;
  auto key = [&](std::size_t idx) {
    Committee wp = FromMask(feasible[idx] & ~hat);
    return std::make_tuple(-std::popcount(sat[idx]), wp.size(), wp);
  };
  for (std::size_t idx = 0; idx < feasible.size(); ++idx) {
    Mask f = feasible[idx];
    if ((f & hat) != hat) continue;
    if (std::popcount(f & ~hat) > kp || std::popcount(hat) > k - kp) continue;
    if (!good(idx)) continue;
    if (!best || key(idx) < key(*best)) best = idx;
  }
  if (!best) return std::nullopt;
  return FromMask(feasible[*best] & ~hat);
}

}  // namespace verify_internal

// Unconstrained core in k-mode: fails iff some T with |T| n <= |S_T| k
// gives every member of S_T at least gamma (u_i(W) + 1).
inline VerificationReport CheckCore(const Instance& inst, const Committee& w, const Rational& gamma,
                                    const VerifyOptions& opts = {}) {
  using namespace verify_internal;
  if (!inst.k_mode()) throw ModeError("the core check needs a k-mode instance; use pb-core for budgets");
  if (gamma < 1) throw ParameterError("gamma must be at least 1");
  if (inst.n() > 63) throw EnumerationLimitError("at most 63 voters");
  if (inst.m() > 64) throw EnumerationLimitError("at most 64 candidates");
  int k = inst.k();
  CheckCap(inst.m(), k, opts.cap, "core check");
  VerificationReport report;
  report.notion = Notion::kCore;
  report.parameter = gamma;
  std::vector<Surd> threshold = Thresholds(inst, w, gamma);
  long n = inst.n();
  int min_size = std::max(1, opts.min_coalition_size);
  auto found = FirstHit<long>(
      inst.m(), k, opts.jobs, &report.sets_enumerated,
      [&](const Committee& t) -> long {
        if (opts.deviation_must_be_feasible && !inst.family().IsFeasible(t)) return 0;
        Mask s = SatisfiedMask(inst, ToMask(t), threshold);
        int size = std::popcount(s);
        if (size < min_size) return 0;
        if (static_cast<long>(t.size()) * n > static_cast<long>(size) * k) return 0;
        return static_cast<long>(s);
      },
      [](const long& s) { return s != 0; });
  if (found) {
    report.pass = false;
    report.coalition = MaskVoters(static_cast<Mask>(found->second));
    report.deviation = found->first;
  }
  if (min_size > 1) report.notes.push_back("coalitions smaller than " + std::to_string(min_size) + " ignored");
  if (opts.deviation_must_be_feasible) report.notes.push_back("deviations restricted to feasible committees");
  report.notes.push_back("endowment |S| k / n used without rounding");
  return report;
}

// Restrained core. For each endowment k' and each admissible hat(W), the
// coalitions that can be satisfied by some completion form a down-closed
// set; S blocks iff it lies in all of them.
inline VerificationReport CheckRestrainedCore(const Instance& inst, const Committee& w, const Rational& gamma,
                                              const VerifyOptions& opts = {}) {
  using namespace verify_internal;
  CheckRestrainedLimits(inst, opts);
  if (gamma < 1) throw ParameterError("gamma must be at least 1");
  if (!inst.family().IsFeasible(w)) throw ParameterError("W " + FormatCommittee(w) + " is not in P");
  const int n = inst.n();
  const int k = inst.k();
  VerificationReport report;
  report.notion = Notion::kRestrainedCore;
  report.parameter = gamma;
  report.mode = RestrainedModeName(opts.mode);
  std::vector<Mask> feasible = FeasibleMasks(inst, opts.cap);
  std::vector<Surd> threshold = Thresholds(inst, w, gamma);
  std::vector<Mask> sat(feasible.size());
  ParallelFor(feasible.size(), opts.jobs,
              [&](std::size_t i) { sat[i] = SatisfiedMask(inst, feasible[i], threshold); });
  report.sets_enumerated = feasible.size();
  const Mask allowed = opts.mode == RestrainedMode::kSubsetOfW ? ToMask(w) : ~Mask{0};
  const std::size_t space = std::size_t{1} << n;
  std::vector<char> blocking(space, 0);
  std::vector<char> vacuous_kp;
  for (int kp : DistinctEndowments(n, k)) {
    std::unordered_map<Mask, std::vector<Mask>> marks;
    for (std::size_t idx = 0; idx < feasible.size(); ++idx) {
      ForEachHat(feasible[idx], allowed, kp, k, [&](Mask hat) { marks[hat].push_back(sat[idx]); });
    }
    report.sets_enumerated += marks.size();
    std::vector<char> in_all(space, 1);
    if (marks.empty()) {
      std::fill(in_all.begin(), in_all.end(), 0);
      report.vacuous = true;
    } else {
      std::vector<Mask> hats;
      for (const auto& [hat, list] : marks) hats.push_back(hat);
      std::sort(hats.begin(), hats.end());
      int chunks = std::max(1, std::min<int>(opts.jobs, static_cast<int>(hats.size())));
      std::vector<std::vector<char>> partial(chunks, std::vector<char>(space, 1));
      ParallelFor(chunks, opts.jobs, [&](std::size_t c) {
        std::vector<char> down(space);
        for (std::size_t h = c; h < hats.size(); h += chunks) {
          std::fill(down.begin(), down.end(), 0);
          for (Mask s : marks[hats[h]]) down[s] = 1;
          for (int b = 0; b < n; ++b) {
            for (std::size_t s = 0; s < space; ++s) {
              if ((s >> b & 1) && down[s]) down[s & ~(std::size_t{1} << b)] = 1;
            }
          }
          for (std::size_t s = 0; s < space; ++s) partial[c][s] &= down[s];
        }
      });
      for (const auto& p : partial) {
        for (std::size_t s = 0; s < space; ++s) in_all[s] &= p[s];
      }
    }
    for (std::size_t s = 1; s < space; ++s) {
      if (Endowment(std::popcount(s), k, n) != kp) continue;
      blocking[s] = in_all[s];
      if (marks.empty()) ++report.vacuous_coalitions;
    }
  }
  std::optional<Mask> witness;
  ForEachSubsetBySize(n, n, [&](const Committee& voters) {
    if (voters.empty()) return true;
    Mask s = VoterMask(voters);
    if (blocking[s]) {
      witness = s;
      return false;
    }
    return true;
  });
  if (report.vacuous) {
    report.notes.push_back("some endowments admit no completable hat(W); those coalitions are non-blocking");
  }
  if (inst.family().kind() == ConstraintKind::kCardinality) {
    report.notes.push_back("endowment floored to floor(|S| k / n), unlike the unconstrained core check");
  }
  if (!witness) return report;
  report.pass = false;
  Mask s = *witness;
  report.coalition = MaskVoters(s);
  int kp = Endowment(std::popcount(s), k, n);
  report.endowment = kp;
  std::map<Committee, Mask> hats;
  for (Mask f : feasible) ForEachHat(f, allowed, kp, k, [&](Mask hat) { hats[FromMask(hat)] = hat; });
  std::vector<std::pair<Committee, Mask>> ordered(hats.begin(), hats.end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto& x, const auto& y) { return x.first.size() < y.first.size(); });
  for (const auto& [hat_c, hat] : ordered) {
    auto wp = ChooseCompletion(feasible, sat, hat, allowed, kp, k,
                               [&](std::size_t idx) { return (sat[idx] & s) == s; });
    if (!wp) throw Error("internal: blocking coalition without a completion");
    report.certificate.push_back({hat_c, *wp});
  }
  return report;
}

// Restrained EJR with approval utilities: condition (2) asks for at least
// max_{i in S} u_i(W) + 1 commonly approved members of T.
inline VerificationReport CheckRestrainedEjr(const Instance& inst, const Committee& w,
                                             const VerifyOptions& opts = {}) {
  using namespace verify_internal;
  CheckRestrainedLimits(inst, opts);
  for (const auto& u : inst.utilities()) {
    if (u.kind() != UtilityKind::kApproval) throw RuleMismatchError("restrained EJR needs approval utilities");
  }
  if (!inst.family().IsFeasible(w)) throw ParameterError("W " + FormatCommittee(w) + " is not in P");
  const int n = inst.n();
  const int k = inst.k();
  VerificationReport report;
  report.notion = Notion::kRestrainedEjr;
  report.mode = RestrainedModeName(opts.mode);
  std::vector<Mask> feasible = FeasibleMasks(inst, opts.cap);
  report.sets_enumerated = feasible.size();
  const Mask allowed = opts.mode == RestrainedMode::kSubsetOfW ? ToMask(w) : ~Mask{0};
  std::vector<Mask> approved(n);
  std::vector<long> util(n);
  Mask wmask = ToMask(w);
  for (int i = 0; i < n; ++i) {
    approved[i] = ToMask(inst.utility(i).approved());
    util[i] = std::popcount(approved[i] & wmask);
  }
  auto ok = [&](Mask s, Mask f) {
    Mask common = ~Mask{0};
    long need = 0;
    for (Mask r = s; r; r &= r - 1) {
      int i = std::countr_zero(r);
      common &= approved[i];
      need = std::max(need, util[i] + 1);
    }
    return std::popcount(common & f) >= need;
  };
  const std::size_t space = std::size_t{1} << n;
  std::vector<char> blocking(space, 0);
  for (int kp : DistinctEndowments(n, k)) {
    // Admissible hats and, per feasible F, the hats it completes.
    std::unordered_map<Mask, int> hat_index;
    std::vector<std::vector<int>> hats_of(feasible.size());
    for (std::size_t idx = 0; idx < feasible.size(); ++idx) {
      ForEachHat(feasible[idx], allowed, kp, k, [&](Mask hat) {
        auto [it, inserted] = hat_index.emplace(hat, static_cast<int>(hat_index.size()));
        hats_of[idx].push_back(it->second);
      });
    }
    report.sets_enumerated += hat_index.size();
    std::vector<Mask> coalitions;
    for (std::size_t s = 1; s < space; ++s) {
      if (Endowment(std::popcount(s), k, n) == kp) coalitions.push_back(s);
    }
    if (hat_index.empty()) {
      report.vacuous = true;
      report.vacuous_coalitions += static_cast<long>(coalitions.size());
      continue;
    }
    ParallelFor(coalitions.size(), opts.jobs, [&](std::size_t c) {
      Mask s = coalitions[c];
      std::vector<char> covered(hat_index.size(), 0);
      std::size_t count = 0;
      for (std::size_t idx = 0; idx < feasible.size() && count < covered.size(); ++idx) {
        if (hats_of[idx].empty() || !ok(s, feasible[idx])) continue;
        for (int h : hats_of[idx]) {
          if (!covered[h]) {
            covered[h] = 1;
            ++count;
          }
        }
      }
      blocking[s] = count == covered.size();
    });
  }
  std::optional<Mask> witness;
  ForEachSubsetBySize(n, n, [&](const Committee& voters) {
    if (voters.empty()) return true;
    Mask s = VoterMask(voters);
    if (blocking[s]) {
      witness = s;
      return false;
    }
    return true;
  });
  report.notes.push_back("the per-member condition does not depend on the member and is checked once");
  if (report.vacuous) {
    report.notes.push_back("some endowments admit no completable hat(W); those coalitions are non-blocking");
  }
  if (!witness) return report;
  report.pass = false;
  Mask s = *witness;
  report.coalition = MaskVoters(s);
  int kp = Endowment(std::popcount(s), k, n);
  report.endowment = kp;
  std::vector<Mask> sat(feasible.size());
  for (std::size_t idx = 0; idx < feasible.size(); ++idx) sat[idx] = ok(s, feasible[idx]) ? s : 0;
  std::map<Committee, Mask> hats;
  for (Mask f : feasible) ForEachHat(f, allowed, kp, k, [&](Mask hat) { hats[FromMask(hat)] = hat; });
  std::vector<std::pair<Committee, Mask>> ordered(hats.begin(), hats.end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto& x, const auto& y) { return x.first.size() < y.first.size(); });
  for (const auto& [hat_c, hat] : ordered) {
    auto wp = ChooseCompletion(feasible, sat, hat, allowed, kp, k, [&](std::size_t idx) { return sat[idx] != 0; });
    if (!wp) throw Error("internal: blocking coalition without a completion");
    report.certificate.push_back({hat_c, *wp});
  }
  return report;
}

namespace verify_internal {

// Shared enumeration for the budget notions: T ranges over all subsets of
// C with Cost(T) <= b.
inline VerificationReport BudgetCheck(const Instance& inst_in, const Committee& w, const Rational& param,
                                      Notion notion, const VerifyOptions& opts) {
  if (inst_in.k_mode() && !opts.auto_lift) {
    throw ModeError(std::string(NotionName(notion)) + " needs a budget-mode instance");
  }
  const Instance inst = inst_in.k_mode() ? inst_in.LiftToBudget() : inst_in;
  if (param < 1) throw ParameterError("the approximation parameter must be at least 1");
  if (inst.n() > 63) throw EnumerationLimitError("at most 63 voters");
  if (inst.m() > 40) throw EnumerationLimitError("at most 40 candidates");
  CheckCap(inst.m(), inst.m(), opts.cap, NotionName(notion));
  VerificationReport report;
  report.notion = notion;
  report.parameter = param;
  if (inst_in.k_mode()) report.notes.push_back("k-mode instance lifted to unit sizes with b = k");
  const long n = inst.n();
  const Rational& b = inst.budget();
  std::vector<Surd> base = inst.Values(w);
  std::vector<Surd> threshold;
  if (notion == Notion::kPbCore) threshold = Thresholds(inst, w, param);
  // Result: strict-satisfied mask in the low word; bit 63 flags a
  // deviation that only works with equality.
  auto found = FirstHit<Mask>(
      inst.m(), inst.m(), opts.jobs, &report.sets_enumerated,
      [&](const Committee& t) -> Mask {
        Rational cost = inst.Cost(t);
        if (cost > b) return 0;
        if (opts.deviation_must_be_feasible && !inst.family().IsFeasible(t)) return 0;
        Mask strict = 0, weak = 0;
        for (int i = 0; i < inst.n(); ++i) {
          Surd u = inst.utility(i).Evaluate(t);
          if (notion == Notion::kPbCore) {
            if (u >= threshold[i]) strict |= weak |= Mask{1} << i;
          } else {
            if (u > base[i]) strict |= Mask{1} << i;
            if (u >= base[i]) weak |= Mask{1} << i;
          }
        }
        Rational scale = cost * n;
        if (notion != Notion::kPbCore) scale *= param;
        auto affordable = [&](Mask s) { return s != 0 && scale <= Rational(std::popcount(s)) * b; };
        Mask used = opts.weak_endowment ? weak : strict;
        if (affordable(used)) return used;
        if (notion == Notion::kEndowmentCore && affordable(weak)) return Mask{1} << 63;
        return 0;
      },
      [&](const Mask& r) {
        if (r == (Mask{1} << 63)) {
          report.degenerate_equality = true;
          return false;
        }
        return r != 0;
      });
  if (found) {
    report.pass = false;
    report.coalition = MaskVoters(found->second);
    report.deviation = found->first;
  }
  if (notion == Notion::kEndowmentCore) {
    report.notes.push_back(opts.weak_endowment ? "members must weakly gain (u_i(T) >= u_i(W))"
                                               : "members must strictly gain (u_i(T) > u_i(W))");
    if (report.degenerate_equality) {
      report.notes.push_back("a deviation exists that only ties every member; not counted as blocking");
    }
  }
  return report;
}

}  // namespace verify_internal

inline VerificationReport CheckPbCore(const Instance& inst, const Committee& w, const Rational& gamma,
                                      const VerifyOptions& opts = {}) {
  return verify_internal::BudgetCheck(inst, w, gamma, Notion::kPbCore, opts);
}

inline VerificationReport CheckEndowmentCore(const Instance& inst, const Committee& w, const Rational& theta,
                                             const VerifyOptions& opts = {}) {
  return verify_internal::BudgetCheck(inst, w, theta, Notion::kEndowmentCore, opts);
}

inline VerificationReport Verify(Notion notion, const Instance& inst, const Committee& w, const Rational& param,
                                 const VerifyOptions& opts = {}) {
  switch (notion) {
    case Notion::kCore: return CheckCore(inst, w, param, opts);
    case Notion::kRestrainedCore: return CheckRestrainedCore(inst, w, param, opts);
    case Notion::kRestrainedEjr: return CheckRestrainedEjr(inst, w, opts);
    case Notion::kEndowmentCore: return CheckEndowmentCore(inst, w, param, opts);
    case Notion::kPbCore: return CheckPbCore(inst, w, param, opts);
  }
  throw Error("unknown notion");
}

// ---------------------------------------------------------------------------
// Witness replay. These predicates restate the definitions directly and do
// not share code with the searches above.

// S and T block W in the core: |T| n <= |S| k and every member reaches
// gamma (u_i(W) + 1).
inline bool ReplayCoreBlock(const Instance& inst, const Committee& w, const Rational& gamma,
                            const std::vector<int>& s, const Committee& t) {
  if (s.empty()) return false;
  if (static_cast<long>(t.size()) * inst.n() > static_cast<long>(s.size()) * inst.k()) return false;
  for (int i : s) {
    if (inst.Value(i, t) < Surd(gamma) * (inst.Value(i, w) + Surd(1))) return false;
  }
  return true;
}

inline bool ReplayBudgetBlock(const Instance& inst_in, const Committee& w, const Rational& param, Notion notion,
                              const std::vector<int>& s, const Committee& t, bool weak_endowment = false) {
  const Instance inst = inst_in.k_mode() ? inst_in.LiftToBudget() : inst_in;
  if (s.empty()) return false;
  Rational lhs = inst.Cost(t) * inst.n();
  if (notion == Notion::kEndowmentCore) lhs *= param;
  if (lhs > Rational(static_cast<long>(s.size())) * inst.budget()) return false;
  for (int i : s) {
    Surd ut = inst.Value(i, t);
    Surd uw = inst.Value(i, w);
    if (notion == Notion::kPbCore) {
      if (ut < Surd(param) * (uw + Surd(1))) return false;
    } else if (weak_endowment ? ut < uw : ut <= uw) {
      return false;
    }
  }
  return true;
}

// Replays a restrained certificate: every admissible hat(W) is present, and
// each listed completion is feasible, within the endowment and satisfies
// the coalition. `condition(T)` is the per-coalition requirement.
inline bool ReplayRestrainedCertificate(const Instance& inst, const Committee& w, RestrainedMode mode,
                                        const std::vector<int>& s,
                                        const std::vector<CertificateEntry>& certificate,
                                        const std::function<bool(const Committee&)>& condition) {
  if (s.empty()) return false;
  int k = inst.k();
  int kp = static_cast<int>(static_cast<long>(s.size()) * k / inst.n());
  std::map<Committee, Committee> given;
  for (const auto& e : certificate) given[e.hat_w] = e.w_prime;
  Committee pool = mode == RestrainedMode::kSubsetOfW ? w : Range(inst.m());
  bool any = false;
  bool ok = true;
  ForEachSubsetBySize(static_cast<int>(pool.size()), k - kp, [&](const Committee& local) {
    Committee hat;
    for (int x : local) hat.push_back(pool[x]);
    if (!IsQCompletable(inst.family(), hat, kp)) return true;
    any = true;
    auto it = given.find(hat);
    if (it == given.end()) {
      ok = false;
      return false;
    }
    Committee t = Union(hat, it->second);
    if (static_cast<int>(it->second.size()) > kp || !inst.family().IsFeasible(t) || !condition(t)) {
      ok = false;
      return false;
    }
    return true;
  });
  return any && ok;
}

inline bool ReplayRestrainedCore(const Instance& inst, const Committee& w, const Rational& gamma,
                                 RestrainedMode mode, const std::vector<int>& s,
                                 const std::vector<CertificateEntry>& certificate) {
  return ReplayRestrainedCertificate(inst, w, mode, s, certificate, [&](const Committee& t) {
    for (int i : s) {
      if (inst.Value(i, t) < Surd(gamma) * (inst.Value(i, w) + Surd(1))) return false;
    }
    return true;
  });
}

inline bool ReplayRestrainedEjr(const Instance& inst, const Committee& w, RestrainedMode mode,
                                const std::vector<int>& s, const std::vector<CertificateEntry>& certificate) {
  return ReplayRestrainedCertificate(inst, w, mode, s, certificate, [&](const Committee& t) {
    Committee common = t;
    long need = 0;
    for (int i : s) {
      common = Intersection(common, inst.utility(i).approved());
      need = std::max(need, static_cast<long>(Intersection(w, inst.utility(i).approved()).size()) + 1);
    }
    return static_cast<long>(common.size()) >= need;
  });
}

// Replays a failing report through the predicates above.
inline bool ReplayReport(const Instance& inst, const Committee& w, const VerificationReport& r,
                         const VerifyOptions& opts = {}) {
  if (r.pass) return false;
  switch (r.notion) {
    case Notion::kCore:
      return r.deviation && ReplayCoreBlock(inst, w, r.parameter, r.coalition, *r.deviation) &&
             static_cast<int>(r.coalition.size()) >= opts.min_coalition_size;
    case Notion::kRestrainedCore:
      return ReplayRestrainedCore(inst, w, r.parameter, opts.mode, r.coalition, r.certificate);
    case Notion::kRestrainedEjr:
      return ReplayRestrainedEjr(inst, w, opts.mode, r.coalition, r.certificate);
    case Notion::kEndowmentCore:
    case Notion::kPbCore:
      return r.deviation &&
             ReplayBudgetBlock(inst, w, r.parameter, r.notion, r.coalition, *r.deviation, opts.weak_endowment);
  }
  return false;
}

}  // namespace nashcore

#endif  // NASHCORE_VERIFIERS_H_
