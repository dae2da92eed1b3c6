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

// Exhaustive restrained-core search on the four-voter, six-party packing
// instance, carried out over party-count profiles instead of committees.
//
// Every voter's utility depends only on how many candidates a committee takes
// from each party, dummies are worth nothing and only the packing row
// constrains the parties, so a committee is described by six counts. The
// search below decides, for every count profile of W, whether some coalition
// blocks it, under either reading of the restrained core.

#ifndef NASHCORE_PARTY_PROFILE_H_
#define NASHCORE_PARTY_PROFILE_H_

#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "nashcore/errors.h"
#include "nashcore/generators.h"
#include "nashcore/rational.h"
#include "nashcore/verifiers.h"

namespace nashcore {

using PartyCounts = std::array<int, 6>;

struct PartyProfileParams {
  int pool = 0;
  int cap = 0;
  int k = 0;
  Rational gamma{16, 15};
  double time_limit_seconds = 3600;
};

struct PartyProfileReport {
  long profiles = 0;             // W count profiles examined
  long any_w_passing = 0;        // profiles no coalition blocks when hat(W) is arbitrary
  long subset_passing = 0;       // profiles no coalition blocks when hat(W) ⊆ W
  std::optional<PartyCounts> first_any_w_pass;
  std::optional<PartyCounts> first_subset_pass;
  bool cap_exceeded = false;
  double seconds = 0;
};

namespace profile_internal {

constexpr int kVoters = 4;

inline std::array<int, kVoters> UtilitiesOf(const PartyCounts& c) {
  std::array<int, kVoters> u{};
  for (int p = 0; p < 6; ++p) {
    u[kLbPartyVoters[p][0]] += c[p];
    u[kLbPartyVoters[p][1]] += c[p];
  }
  return u;
}

inline int Sum(const PartyCounts& c) {
  int s = 0;
  for (int x : c) s += x;
  return s;
}

// Fewest party candidates meeting the nonnegative demands of the coalition
// members. Any two voters share a party, so one candidate serves at most two
// members and any pair can be served together.
inline int MinCover(const int* demand, size_t size) {
  int total = 0, top = 0;
  for (size_t i = 0; i < size; ++i) {
    total += demand[i];
    top = std::max(top, demand[i]);
  }
  if (size <= 1) return total;
  if (size == 2) return top;
  return std::max(top, (total + 1) / 2);
}

inline int MinCover(const std::vector<int>& demand) { return MinCover(demand.data(), demand.size()); }

// Visits count vectors with total at most `limit` (and at most `upper`
// coordinatewise) until `visit` returns false.
inline bool ForEachCounts(int limit, const std::function<bool(const PartyCounts&)>& visit,
                          const std::optional<PartyCounts>& upper = std::nullopt, bool descending = false) {
  PartyCounts c{};
  std::function<bool(int, int)> rec = [&](int p, int left) {
    if (p == 6) return visit(c);
    int hi = left;
    if (upper) hi = std::min(hi, (*upper)[p]);
    for (int i = 0; i <= hi; ++i) {
      int v = descending ? hi - i : i;
      c[p] = v;
      if (!rec(p + 1, left - v)) return false;
    }
    c[p] = 0;
    return true;
  };
  return rec(0, limit);
}

struct Coalition {
  std::vector<int> members;
  int endowment = 0;   // k'
  int hat_limit = 0;   // largest |hat(W) ∩ parties|
  // Pareto frontier of (member utilities from hat(W), party candidates used).
  std::vector<std::pair<std::vector<int>, int>> frontier;
  std::vector<PartyCounts> witnesses;  // one hat(W) profile per frontier entry
};

inline std::vector<Coalition> BuildCoalitions(const PartyProfileParams& p) {
  std::vector<Coalition> out;
  for (int mask = 1; mask < (1 << kVoters); ++mask) {
    Coalition c;
    for (int v = 0; v < kVoters; ++v) {
      if (mask >> v & 1) c.members.push_back(v);
    }
    c.endowment = static_cast<int>(c.members.size()) * p.k / kVoters;
    c.hat_limit = std::min(p.k - c.endowment, p.cap);
    std::map<std::vector<int>, int> best;
    std::map<std::vector<int>, PartyCounts> witness;
    ForEachCounts(c.hat_limit, [&](const PartyCounts& h) {
      auto u = UtilitiesOf(h);
      std::vector<int> key;
      for (int v : c.members) key.push_back(u[v]);
      int s = Sum(h);
      auto it = best.find(key);
      if (it == best.end() || it->second < s) {
        best[key] = s;
        witness[key] = h;
      }
      return true;
    });
    for (const auto& [key, s] : best) {
      bool dominated = false;
      for (const auto& [other, t] : best) {
        if (other == key || t < s) continue;
        bool le = true;
        for (size_t i = 0; i < key.size(); ++i) le = le && other[i] <= key[i];
        if (le) {
          dominated = true;
          break;
        }
      }
      if (!dominated) {
        c.frontier.emplace_back(key, s);
        c.witnesses.push_back(witness[key]);
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

inline std::array<int, kVoters> Demands(const std::array<int, kVoters>& u, const Rational& gamma) {
  long num = gamma.get_num().get_si(), den = gamma.get_den().get_si();
  std::array<int, kVoters> d{};
  for (int v = 0; v < kVoters; ++v) d[v] = static_cast<int>((num * (u[v] + 1) + den - 1) / den);
  return d;
}

// Whether the coalition meets its demands against hat(W) with the given
// member utilities and party usage.
inline bool Answers(const PartyProfileParams& p, const Coalition& c, const std::array<int, kVoters>& d,
                    const std::vector<int>& from_hat, int used) {
  std::array<int, kVoters> need{};
  for (size_t i = 0; i < c.members.size(); ++i) need[i] = std::max(0, d[c.members[i]] - from_hat[i]);
  return MinCover(need.data(), c.members.size()) <= std::min(c.endowment, p.cap - used);
}

inline bool BlocksAnyW(const PartyProfileParams& p, const Coalition& c, const std::array<int, kVoters>& d) {
  for (const auto& [from_hat, used] : c.frontier) {
    if (!Answers(p, c, d, from_hat, used)) return false;
  }
  return true;
}

inline bool BlocksSubset(const PartyProfileParams& p, const Coalition& c, const std::array<int, kVoters>& d,
                         const PartyCounts& w) {
  // The arbitrary-hat adversaries that already fit inside W settle most cases.
  for (size_t i = 0; i < c.frontier.size(); ++i) {
    bool fits = true;
    for (int q = 0; q < 6; ++q) fits = fits && c.witnesses[i][q] <= w[q];
    if (fits && !Answers(p, c, d, c.frontier[i].first, c.frontier[i].second)) return false;
  }
  std::vector<int> from_hat(c.members.size());
  return ForEachCounts(c.hat_limit, [&](const PartyCounts& h) {
    auto u = UtilitiesOf(h);
    for (size_t i = 0; i < c.members.size(); ++i) from_hat[i] = u[c.members[i]];
    return Answers(p, c, d, from_hat, Sum(h));
  }, w, true);
}

}  // namespace profile_internal

enum class ProfileMode { kAnyW, kSubset };

// Whether a W with counts `w` lies in the restrained core.
inline bool ProfilePasses(const PartyProfileParams& p, const PartyCounts& w, ProfileMode mode) {
  using namespace profile_internal;
  auto coalitions = BuildCoalitions(p);
  auto d = Demands(UtilitiesOf(w), p.gamma);
  for (const auto& c : coalitions) {
    bool blocks = mode == ProfileMode::kAnyW ? BlocksAnyW(p, c, d) : BlocksSubset(p, c, d, w);
    if (blocks) return false;
  }
  return true;
}

inline PartyProfileReport SearchPartyProfiles(const PartyProfileParams& p) {
  using namespace profile_internal;
  if (p.pool < p.cap) throw ParameterError("party pools must hold at least cap candidates");
  if (!p.gamma.get_num().fits_slong_p() || !p.gamma.get_den().fits_slong_p()) {
    throw ParameterError("gamma is too large for the profile search");
  }
  auto start = std::chrono::steady_clock::now();
  PartyProfileReport rep;
  auto coalitions = BuildCoalitions(p);
  std::unordered_map<std::uint64_t, bool> any_w_memo;
  auto key = [](const std::array<int, kVoters>& u) {
    std::uint64_t x = 0;
    for (int v : u) x = x * 1024 + static_cast<std::uint64_t>(v);
    return x;
  };
  int limit = std::min(p.cap, p.k);
  ForEachCounts(limit, [&](const PartyCounts& w) {
    ++rep.profiles;
    if ((rep.profiles & 0xffff) == 0) {
      double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      if (elapsed > p.time_limit_seconds) {
        rep.cap_exceeded = true;
        return false;
      }
    }
    auto u = UtilitiesOf(w);
    auto d = Demands(u, p.gamma);
    auto it = any_w_memo.find(key(u));
    bool any_pass;
    if (it != any_w_memo.end()) {
      any_pass = it->second;
    } else {
      any_pass = true;
      for (const auto& c : coalitions) {
        if (BlocksAnyW(p, c, d)) {
          any_pass = false;
          break;
        }
      }
      any_w_memo[key(u)] = any_pass;
    }
    if (!any_pass) return true;  // blocked with arbitrary hat(W), hence blocked with hat(W) ⊆ W
    ++rep.any_w_passing;
    if (!rep.first_any_w_pass) rep.first_any_w_pass = w;
    for (const auto& c : coalitions) {
      if (BlocksSubset(p, c, d, w)) return true;
    }
    ++rep.subset_passing;
    if (!rep.first_subset_pass) rep.first_subset_pass = w;
    return true;
  });
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

// The party counts of a committee of the lb16-15 instance.
inline PartyCounts CountsOf(const Lb1615Params& p, const Committee& w) {
  PartyCounts c{};
  for (int j : w) {
    if (j < 6 * p.pool) ++c[j / p.pool];
  }
  return c;
}

}  // namespace nashcore

#endif  // NASHCORE_PARTY_PROFILE_H_
