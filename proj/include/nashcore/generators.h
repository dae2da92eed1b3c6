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

#ifndef NASHCORE_GENERATORS_H_
#define NASHCORE_GENERATORS_H_

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "nashcore/committee.h"
#include "nashcore/errors.h"
#include "nashcore/feasibility.h"
#include "nashcore/instance.h"
#include "nashcore/interval.h"
#include "nashcore/random.h"
#include "nashcore/rational.h"
#include "nashcore/surd.h"
#include "nashcore/utility.h"

namespace nashcore {

// ---------------------------------------------------------------------------
// XOS example: candidates a1..ak, b1..bk; voter i values
// max(|T ∩ B|, |T ∩ {a_i}|); cardinality k.

inline Instance GenXosExample(int k) {
  if (k < 2) throw ParameterError("xos example needs k >= 2");
  int m = 2 * k;
  std::vector<std::string> ids;
  for (int i = 1; i <= k; ++i) ids.push_back("a" + std::to_string(i));
  for (int i = 1; i <= k; ++i) ids.push_back("b" + std::to_string(i));
  std::vector<Utility> utilities;
  for (int i = 0; i < k; ++i) {
    std::vector<Rational> on_b(m, 0), on_a(m, 0);
    for (int j = k; j < m; ++j) on_b[j] = 1;
    on_a[i] = 1;
    utilities.push_back(Utility::Xos({on_b, on_a}));
  }
  return Instance::WithK(ids, std::move(utilities), FeasibilityFamily::Cardinality(m, k));
}

// ---------------------------------------------------------------------------
// q groups of voters, each approving its own block T_j of q candidates, plus
// k = q^2 dummy candidates. At most q candidates may come from the blocks.

struct Rest1Layout {
  int q = 0;
  int k = 0;
  std::vector<Committee> blocks;    // T_1..T_q
  Committee dummies;
  std::vector<std::vector<int>> groups;  // voters of V_1..V_q
};

inline Rest1Layout Rest1Shape(int q, int voters_per_group) {
  Rest1Layout layout;
  layout.q = q;
  layout.k = q * q;
  int next = 0;
  for (int j = 0; j < q; ++j) {
    Committee block;
    for (int l = 0; l < q; ++l) block.push_back(next++);
    layout.blocks.push_back(block);
  }
  for (int l = 0; l < layout.k; ++l) layout.dummies.push_back(next++);
  int voter = 0;
  for (int j = 0; j < q; ++j) {
    std::vector<int> group;
    for (int v = 0; v < voters_per_group; ++v) group.push_back(voter++);
    layout.groups.push_back(group);
  }
  return layout;
}

inline Instance GenRest1(int q, int voters_per_group) {
  if (q < 2) throw ParameterError("rest1 needs q >= 2");
  if (voters_per_group < 1) throw ParameterError("rest1 needs at least one voter per group");
  Rest1Layout layout = Rest1Shape(q, voters_per_group);
  int m = q * q + layout.k;
  std::vector<std::string> ids;
  for (int j = 0; j < q; ++j) {
    for (int l = 0; l < q; ++l) ids.push_back("t" + std::to_string(j + 1) + "_" + std::to_string(l + 1));
  }
  for (int l = 0; l < layout.k; ++l) ids.push_back("d" + std::to_string(l + 1));
  std::vector<Utility> utilities;
  for (int j = 0; j < q; ++j) {
    for (int v = 0; v < voters_per_group; ++v) utilities.push_back(Utility::Approval(m, layout.blocks[j]));
  }
  Committee all_blocks;
  for (const auto& b : layout.blocks) all_blocks = Union(all_blocks, b);
  return Instance::WithK(ids, std::move(utilities),
                         FeasibilityFamily::Partition(m, layout.k, {all_blocks}, {q}));
}

// ---------------------------------------------------------------------------
// Four voters a, b, c, d and six parties, one per voter pair; each party is
// approved by exactly its two voters. A single packing row caps the
// non-dummy candidates; dummies are approved by nobody.

inline constexpr std::array<const char*, 6> kLbParties = {"g_ab", "g_ca", "g_ad", "g_bc", "g_bd", "g_cd"};
// Voters (0=a, 1=b, 2=c, 3=d) of each party.
inline constexpr std::array<std::array<int, 2>, 6> kLbPartyVoters = {
    {{0, 1}, {2, 0}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

struct Lb1615Params {
  int pool = 0;     // candidates per party
  int cap = 0;      // packing cap over non-dummy candidates
  int k = 0;
  int dummies = 0;
};

inline Lb1615Params Lb1615Standard(int r) {
  if (r < 5 || r % 5 != 0) throw ParameterError("lb16-15 needs r to be a positive multiple of 5");
  return Lb1615Params{6 * r, 6 * r, 32 * r / 5, 32 * r / 5};
}

// Candidates of party p occupy [p * pool, (p + 1) * pool); dummies follow.
inline Instance GenLb1615(const Lb1615Params& p) {
  if (p.pool < 1 || p.cap < 0 || p.k < 1 || p.dummies < 0) throw ParameterError("bad lb16-15 parameters");
  int m = 6 * p.pool + p.dummies;
  std::vector<std::string> ids;
  for (int party = 0; party < 6; ++party) {
    for (int l = 0; l < p.pool; ++l) ids.push_back(std::string(kLbParties[party]) + "_" + std::to_string(l + 1));
  }
  for (int l = 0; l < p.dummies; ++l) ids.push_back("dummy_" + std::to_string(l + 1));
  std::vector<Utility> utilities;
  for (int v = 0; v < 4; ++v) {
    Committee approved;
    for (int party = 0; party < 6; ++party) {
      if (kLbPartyVoters[party][0] != v && kLbPartyVoters[party][1] != v) continue;
      for (int l = 0; l < p.pool; ++l) approved.push_back(party * p.pool + l);
    }
    utilities.push_back(Utility::Approval(m, Normalized(approved)));
  }
  Committee non_dummy = Range(6 * p.pool);
  return Instance::WithK(ids, std::move(utilities),
                         FeasibilityFamily::Packing(m, p.k, {ConstraintRow{non_dummy, p.cap}}));
}

inline Instance GenLb1615(int r) { return GenLb1615(Lb1615Standard(r)); }

// The first `count` candidates of party `party`.
inline Committee Lb1615Take(const Lb1615Params& p, int party, int count, int offset = 0) {
  if (offset + count > p.pool) throw ParameterError("party pool exhausted");
  Committee c;
  for (int l = 0; l < count; ++l) c.push_back(party * p.pool + offset + l);
  return c;
}

// Deviation of {a, b, c} against a completion t = (t_a, t_b, t_c) chosen by
// d from g_ad, g_bd, g_cd. Returns (x_ab, x_ca, x_bc) and the case label.
struct Lb1Deviation {
  std::array<Rational, 3> x;  // x_ab, x_ca, x_bc
  std::string case_label;     // "1", "2", "3a" or "3b"
};

inline void CheckLb1Region(const std::array<Rational, 4>& u, const std::array<Rational, 3>& t, const Rational& r) {
  auto fail = [](const std::string& why) { throw OutOfRegionError(why); };
  if (r <= 0) fail("r must be positive");
  if (!(u[0] <= u[1] && u[1] <= u[2] && u[2] <= u[3])) fail("utilities must be sorted u_a <= u_b <= u_c <= u_d");
  if (u[0] < Rational(9, 8) * r) fail("u_a below 9r/8");
  if (u[1] < Rational(21, 8) * r) fail("u_b below 21r/8");
  if (u[0] + u[1] + u[2] + u[3] > 12 * r) fail("total utility above 12r");
  if (u[2] > Rational(33, 8) * r) fail("u_c above 33r/8");
  for (const auto& ti : t) {
    if (ti < 0) fail("negative t");
  }
  if (t[0] + t[1] + t[2] > Rational(8, 5) * r) fail("t_a + t_b + t_c above 1.6r");
}

inline Lb1Deviation ComputeLb1Deviation(const std::array<Rational, 4>& u, const std::array<Rational, 3>& t,
                                        const Rational& r) {
  CheckLb1Region(u, t, r);
  const Rational& ua = u[0];
  const Rational& ub = u[1];
  const Rational& uc = u[2];
  Rational total_t = t[0] + t[1] + t[2];
  Rational limit = Rational(6, 5) * r;
  Lb1Deviation out;
  if (total_t <= limit) {
    if (ua + ub >= uc) {
      Rational f(8, 15);
      out.x = {f * (ua + ub - uc), f * (ua + uc - ub), f * (ub + uc - ua)};
      out.case_label = "1";
    } else {
      Rational f(16, 15);
      out.x = {Rational(0), f * ua, f * (uc - ua)};
      out.case_label = "2";
    }
    return out;
  }
  // Scale t down to total exactly 1.2r; a solution against the smaller
  // completion also covers the actual one.
  std::array<Rational, 3> ts;
  for (int i = 0; i < 3; ++i) ts[i] = t[i] * limit / total_t;
  Rational f(16, 15);
  Rational ha = f * ua - ts[0];
  Rational hb = f * ub - ts[1];
  Rational hc = f * uc - ts[2];
  if (ha + hb >= hc) {
    Rational half(1, 2);
    out.x = {half * (ha + hb - hc), half * (ha + hc - hb), half * (hb + hc - ha)};
    out.case_label = "3a";
  } else {
    out.x = {Rational(0), ha, hc - ha};
    out.case_label = "3b";
  }
  return out;
}

// Which of the five constraints hold for (u, t, x).
inline std::array<bool, 5> Lb1Constraints(const std::array<Rational, 4>& u, const std::array<Rational, 3>& t,
                                          const std::array<Rational, 3>& x, const Rational& r) {
  const Rational& xab = x[0];
  const Rational& xca = x[1];
  const Rational& xbc = x[2];
  Rational f(16, 15);
  return {xab + xbc + xca + t[0] + t[1] + t[2] <= 6 * r, xab + xca + t[0] >= f * u[0],
          xab + xbc + t[1] >= f * u[1], xca + xbc + t[2] >= f * u[2],
          xab >= 0 && xbc >= 0 && xca >= 0};
}

// A random point of the precondition region, steered toward one case.
inline std::pair<std::array<Rational, 4>, std::array<Rational, 3>> SampleLb1Point(Rng& rng, long r,
                                                                                  const std::string& target,
                                                                                  long den = 8) {
  for (int attempt = 0; attempt < 100000; ++attempt) {
    auto pick = [&](const Rational& lo, const Rational& hi) {
      if (hi < lo) return Rational(-1);
      return Rational(lo + (hi - lo) * rng.UnitRational(den * r));
    };
    Rational R(r);
    Rational ua = pick(Rational(9, 8) * R, 3 * R);
    Rational ub = pick(std::max(ua, Rational(Rational(21, 8) * R)), Rational(33, 8) * R);
    Rational uc_lo = ub;
    Rational uc_hi = std::min(Rational(Rational(33, 8) * R), Rational((12 * R - ua - ub) / 2));
    if (target == "2") uc_lo = std::max(uc_lo, Rational(ua + ub + Rational(1, den)));
    Rational uc = pick(uc_lo, uc_hi);
    if (uc < 0) continue;
    Rational ud = pick(uc, 12 * R - ua - ub - uc);
    if (ud < 0) continue;
    std::array<Rational, 4> u{ua, ub, uc, ud};
    Rational total = (target == "1" || target == "2") ? pick(Rational(0), Rational(6, 5) * R)
                                                      : pick(Rational(6, 5) * R + Rational(1, den), Rational(8, 5) * R);
    Rational w1 = rng.UnitRational(den), w2 = rng.UnitRational(den), w3 = rng.UnitRational(den);
    if (target == "3b") w3 = 0;
    if (w1 + w2 + w3 == 0) w1 = 1;
    Rational sum = w1 + w2 + w3;
    std::array<Rational, 3> t{total * w1 / sum, total * w2 / sum, total * w3 / sum};
    try {
      if (ComputeLb1Deviation(u, t, R).case_label == target) return {u, t};
    } catch (const OutOfRegionError&) {
    }
  }
  throw ParameterError("could not sample a point for case " + target);
}

// The two explicit deviations behind the utility lower bounds, built on the
// actual instance at scale r. For each, the adversarial hat(W) fills its
// share with candidates the coalition does not approve, using as much of
// the packing cap as possible; the coalition then spends the remaining cap
// on a jointly approved party.
struct UtiDeviationCheck {
  std::string coalition;
  int endowment = 0;
  int hat_size = 0;
  int room = 0;            // candidates the coalition can still add
  long max_utility = 0;    // largest u(W) below the lemma's bound
  Rational required;       // (16/15) (max_utility + 1)
  bool construct_ok = false;  // feasibility and sizes checked on the instance
  bool holds = false;         // room >= required and utilities reached
  bool bound_form = false;    // room >= (16/15) * bound (without +1)
};

inline std::vector<UtiDeviationCheck> CheckUtiLowerBound(int r) {
  Lb1615Params p = Lb1615Standard(r);
  Instance inst = GenLb1615(p);
  const int n = 4;
  Rational gamma(16, 15);
  std::vector<UtiDeviationCheck> out;
  struct Spec {
    std::string name;
    std::vector<int> voters;
    Rational bound;               // lemma bound on the last voter's utility
    std::vector<int> hat_parties;  // parties the adversary fills
    int target_party;              // party the coalition draws from
  };
  std::vector<Spec> specs = {
      {"{a}", {0}, Rational(9, 8) * r, {3, 4, 5}, 0},
      {"{a,b}", {0, 1}, Rational(21, 8) * r, {5}, 0},
  };
  for (const auto& s : specs) {
    UtiDeviationCheck c;
    c.coalition = s.name;
    c.endowment = static_cast<int>(static_cast<long>(s.voters.size()) * p.k / n);
    c.hat_size = p.k - c.endowment;
    // Largest integer utility strictly below the bound.
    Integer below = Ceil(s.bound) - 1;
    c.max_utility = below.get_si();
    c.required = gamma * Rational(c.max_utility + 1);
    // Adversarial hat: non-approved non-dummy candidates, as many as the
    // share and the cap allow, spread over the listed parties.
    int fill = std::min(c.hat_size, p.cap);
    Committee hat;
    int per = (fill + static_cast<int>(s.hat_parties.size()) - 1) / static_cast<int>(s.hat_parties.size());
    int left = fill;
    for (int party : s.hat_parties) {
      int take = std::min(per, left);
      hat = Union(hat, Lb1615Take(p, party, take));
      left -= take;
    }
    int dummy_fill = c.hat_size - fill;
    for (int l = 0; l < std::min(dummy_fill, p.dummies); ++l) hat.push_back(6 * p.pool + l);
    hat = Normalized(hat);
    c.room = std::min(c.endowment, p.cap - fill);
    Committee w_prime = Lb1615Take(p, s.target_party, c.room);
    Committee t = Union(hat, w_prime);
    c.construct_ok = static_cast<int>(hat.size()) <= c.hat_size && static_cast<int>(w_prime.size()) <= c.endowment &&
                     inst.family().IsFeasible(t) && inst.family().IsFeasible(hat);
    bool reached = true;
    for (int v : s.voters) {
      if (inst.Value(v, t) < Surd(c.required)) reached = false;
    }
    c.holds = c.construct_ok && reached && Rational(c.room) >= c.required;
    c.bound_form = Rational(c.room) >= gamma * s.bound;
    out.push_back(c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Six parties a..f of r candidates, six voters with the parametric
// utilities for roles (a,b), (b,c), (c,a), (d,e), (e,f), (f,d); k = 3r.

inline constexpr std::array<std::array<int, 2>, 6> kLb00Roles = {{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}}};

inline Instance GenLb00(int beta, int r, AxiomPolicy policy = AxiomPolicy::kCheck) {
  if (beta < 5 || r < 1) throw ParameterError("lb00 needs beta >= 5 and r >= 1");
  int m = 6 * r;
  std::vector<std::string> names = {"a", "b", "c", "d", "e", "f"};
  std::vector<std::string> ids;
  std::vector<int> party_of;
  for (int p = 0; p < 6; ++p) {
    for (int l = 0; l < r; ++l) {
      ids.push_back(names[p] + std::to_string(l + 1));
      party_of.push_back(p);
    }
  }
  std::vector<Utility> utilities;
  for (const auto& role : kLb00Roles) utilities.push_back(Utility::Lb00(beta, r, role[0], role[1], party_of, names));
  return Instance::WithK(ids, std::move(utilities), FeasibilityFamily::Cardinality(m, 3 * r), policy);
}

// For every composition of k = 3r into six party counts (each <= r), the
// two-voter deviation onto a full party. Ratios are exact.
struct Lb00CompositionReport {
  long compositions = 0;
  Surd bound;             // (1/2)(4/3)^(beta/2)
  bool ratio_ok = true;   // every plain ratio >= bound
  Surd min_ratio;         // smallest plain ratio seen (finite ones)
  Surd min_gamma;         // smallest ratio with the +1 term, over all W
  std::array<int, 6> worst_counts{};
  std::optional<std::array<int, 6>> violation;
};

inline Lb00CompositionReport CheckLb00Compositions(int beta, int r) {
  Lb00CompositionReport rep;
  rep.bound = Surd(Rational(1, 2)) / Lb00Z(beta);  // 1 / (2z) = (1/2)(4/3)^(beta/2)
  bool first_ratio = true, first_gamma = true;
  std::array<int, 6> c{};
  std::function<void(int, int)> rec = [&](int p, int left) {
    if (p == 5) {
      if (left > r) return;
      c[5] = left;
      ++rep.compositions;
      // Find a pair {p, next(p)} in one triangle with both counts <= 3r/4.
      std::optional<std::pair<int, int>> pair;
      for (int tri = 0; tri < 2 && !pair; ++tri) {
        for (int i = 0; i < 3 && !pair; ++i) {
          int x = 3 * tri + i, y = 3 * tri + (i + 1) % 3;
          if (4 * c[x] <= 3 * r && 4 * c[y] <= 3 * r) pair = std::make_pair(x, y);
        }
      }
      if (!pair) {
        rep.ratio_ok = false;
        rep.violation = c;
        return;
      }
      int x = pair->first, y = pair->second;
      int tri = x / 3;
      int z = 3 * tri + (y - 3 * tri + 1) % 3;
      // Voters with roles (x, y) and (y, z) deviate onto all of party y.
      std::array<long, 6> dev{};
      dev[y] = r;
      auto value = [&](int first, int second, const auto& counts) {
        return Lb00Value(beta, r, counts[first], counts[second]);
      };
      Surd ratio_min, gamma_min;
      bool have_ratio = false;
      for (auto [f, s] : {std::make_pair(x, y), std::make_pair(y, z)}) {
        Surd now = value(f, s, c);
        Surd after = value(f, s, dev);
        Surd g = after / (now + Surd(1));
        if (!have_ratio || g < gamma_min) gamma_min = g;
        if (now.Sign() > 0) {
          Surd ratio = after / now;
          if (ratio < rep.bound) {
            rep.ratio_ok = false;
            rep.violation = c;
          }
          if (!have_ratio || ratio < ratio_min) ratio_min = ratio;
          have_ratio = true;
        }
      }
      if (have_ratio && (first_ratio || ratio_min < rep.min_ratio)) {
        rep.min_ratio = ratio_min;
        first_ratio = false;
      }
      if (first_gamma || gamma_min < rep.min_gamma) {
        rep.min_gamma = gamma_min;
        rep.worst_counts = c;
        first_gamma = false;
      }
      return;
    }
    for (int v = 0; v <= std::min(r, left); ++v) {
      c[p] = v;
      rec(p + 1, left - v);
    }
  };
  rec(0, 3 * r);
  return rep;
}

// A committee with the given party counts (first members of each party).
inline Committee Lb00Committee(int r, const std::array<int, 6>& counts) {
  Committee w;
  for (int p = 0; p < 6; ++p) {
    for (int l = 0; l < counts[p]; ++l) w.push_back(p * r + l);
  }
  return w;
}

// ---------------------------------------------------------------------------
// Tightness instance for the 2 - alpha bound.

struct Tight2AlphaLayout {
  Rational alpha, epsilon;
  long n = 0, y = 0, k = 0;
  bool overridden = false;
  std::vector<int> v1, v2;
  Committee c1, c2, c3;
  std::vector<Committee> c2_blocks;  // per voter of V_1
  Committee w;                       // C1 ∪ C3
  Committee deviation;               // C1 plus alpha k - y members of C2
};

inline std::pair<long, long> Tight2AlphaMinimalNY(const Rational& alpha, const Rational& eps, long limit = 100000) {
  if (alpha <= 0 || alpha > 1) throw ParameterError("alpha must lie in (0, 1]");
  if (eps <= 0) throw ParameterError("epsilon must be positive");
  Rational n_bound = 2 * (1 - alpha) / (eps * alpha);
  Rational y_bound = 2 * (2 - alpha) / eps;
  long n = -1, y = -1;
  for (long c = 1; c <= limit && n < 0; ++c) {
    if (Rational(c) > n_bound && IsInteger(alpha * c)) n = c;
  }
  for (long c = 1; c <= limit && y < 0; ++c) {
    if (Rational(c) > y_bound && IsInteger(alpha * c)) y = c;
  }
  if (n < 0 || y < 0) throw ParameterError("no integral (n, y) below the search limit");
  return {n, y};
}

inline std::pair<Instance, Tight2AlphaLayout> GenTight2Alpha(const Rational& alpha, const Rational& eps,
                                                             std::optional<long> n_override = std::nullopt,
                                                             std::optional<long> y_override = std::nullopt) {
  auto [n, y] = Tight2AlphaMinimalNY(alpha, eps);
  Tight2AlphaLayout L;
  L.alpha = alpha;
  L.epsilon = eps;
  if (n_override) {
    n = *n_override;
    L.overridden = true;
  }
  if (y_override) {
    y = *y_override;
    L.overridden = true;
  }
  Rational an = alpha * n, ay = alpha * y;
  if (n < 1 || y < 1 || !IsInteger(an) || !IsInteger(ay)) throw ParameterError("alpha n and alpha y must be integers");
  long n1 = an.get_num().get_si();
  long ay_i = ay.get_num().get_si();
  Rational k_exact = (1 - alpha) * n * y + y;
  if (!IsInteger(k_exact)) throw ParameterError("k must be an integer");
  L.n = n;
  L.y = y;
  L.k = k_exact.get_num().get_si();
  std::vector<std::string> ids;
  int next = 0;
  for (long l = 0; l < y; ++l) {
    L.c1.push_back(next++);
    ids.push_back("c1_" + std::to_string(l + 1));
  }
  for (long v = 0; v < n1; ++v) {
    Committee block;
    for (long l = 0; l < ay_i; ++l) {
      block.push_back(next++);
      ids.push_back("c2_" + std::to_string(v + 1) + "_" + std::to_string(l + 1));
    }
    L.c2_blocks.push_back(block);
    L.c2 = Union(L.c2, block);
  }
  std::vector<Committee> c3_blocks;
  for (long v = 0; v < n - n1; ++v) {
    Committee block;
    for (long l = 0; l < y; ++l) {
      block.push_back(next++);
      ids.push_back("c3_" + std::to_string(v + 1) + "_" + std::to_string(l + 1));
    }
    c3_blocks.push_back(block);
    L.c3 = Union(L.c3, block);
  }
  int m = next;
  std::vector<Utility> utilities;
  for (long v = 0; v < n1; ++v) {
    L.v1.push_back(static_cast<int>(v));
    utilities.push_back(Utility::Approval(m, Union(L.c1, L.c2_blocks[v])));
  }
  for (long v = 0; v < n - n1; ++v) {
    L.v2.push_back(static_cast<int>(n1 + v));
    utilities.push_back(Utility::Approval(m, c3_blocks[v]));
  }
  L.w = Union(L.c1, L.c3);
  // V_1's endowment alpha k: all of C1, then C2 spread round-robin.
  Rational budget = alpha * L.k;
  long extra = Floor(budget).get_si() - y;
  Committee dev = L.c1;
  for (long i = 0; i < extra; ++i) {
    const Committee& block = L.c2_blocks[i % n1];
    long pos = i / n1;
    if (pos < static_cast<long>(block.size())) dev.push_back(block[pos]);
  }
  L.deviation = Normalized(dev);
  Instance inst = Instance::WithK(ids, std::move(utilities), FeasibilityFamily::Cardinality(m, static_cast<int>(L.k)));
  return {std::move(inst), std::move(L)};
}

// ---------------------------------------------------------------------------
// The constant of the budget reduction:
// eta beta (32 kappa / (1 - e^{-(eta-2)^2 / (2(eta-1))} / (1 - e^{kappa-1} / kappa^kappa)))^beta.

inline Interval Endow2Bound(int beta, const Rational& kappa, const Rational& eta) {
  if (beta < 1) throw ParameterError("beta must be a positive integer");
  if (kappa <= 1) throw ParameterError("kappa must exceed 1");
  if (eta <= 2) throw ParameterError("eta must exceed 2");
  Interval K(kappa), E(eta);
  Interval chernoff = Exp(K - Interval(1L)) / Exp(K * Log(K));
  Interval inner_den = Interval(1L) - chernoff;
  if (!CertainlyLess(Interval(0L), inner_den)) throw ParameterError("1 - e^(kappa-1)/kappa^kappa is not positive");
  Interval tail = Exp(Interval(0L) - (E - Interval(2L)) * (E - Interval(2L)) / (Interval(2L) * (E - Interval(1L))));
  Interval den = Interval(1L) - tail / inner_den;
  if (!CertainlyLess(Interval(0L), den)) throw ParameterError("the reduction denominator is not positive");
  Interval base = Interval(32L) * K / den;
  return E * Interval(static_cast<long>(beta)) * PowNonneg(base, static_cast<unsigned long>(beta));
}

// The base 32 kappa / (...) alone, the quantity raised to beta.
inline Interval Endow2Base(const Rational& kappa, const Rational& eta) {
  return Endow2Bound(1, kappa, eta) / Interval(eta);
}

// ---------------------------------------------------------------------------
// Random fuzzers.

enum class FuzzUtility { kApproval, kAdditive, kXos, kCoverage };
enum class FuzzFamily { kCardinality, kPartition, kPacking, kExplicit };

inline const char* FuzzUtilityName(FuzzUtility u) {
  switch (u) {
    case FuzzUtility::kApproval: return "approval";
    case FuzzUtility::kAdditive: return "additive";
    case FuzzUtility::kXos: return "xos";
    case FuzzUtility::kCoverage: return "coverage";
  }
  return "?";
}

inline const char* FuzzFamilyName(FuzzFamily f) {
  switch (f) {
    case FuzzFamily::kCardinality: return "none";
    case FuzzFamily::kPartition: return "partition";
    case FuzzFamily::kPacking: return "packing";
    case FuzzFamily::kExplicit: return "explicit";
  }
  return "?";
}

inline std::vector<Rational> RandomWeights(Rng& rng, int m, long den, double zero_prob = 0.3) {
  std::vector<Rational> w(m);
  for (auto& x : w) x = rng.Uniform(0, 999) < zero_prob * 1000 ? Rational(0) : rng.UnitRational(den);
  return w;
}

inline Utility RandomUtility(Rng& rng, FuzzUtility kind, int m) {
  switch (kind) {
    case FuzzUtility::kApproval: {
      Committee a;
      for (int j = 0; j < m; ++j) {
        if (rng.Uniform(0, 2) == 0) a.push_back(j);
      }
      return Utility::Approval(m, a);
    }
    case FuzzUtility::kAdditive:
      return Utility::Additive(RandomWeights(rng, m, 4));
    case FuzzUtility::kXos: {
      int clauses = static_cast<int>(rng.Uniform(1, 3));
      std::vector<std::vector<Rational>> c;
      for (int q = 0; q < clauses; ++q) c.push_back(RandomWeights(rng, m, 4, 0.5));
      return Utility::Xos(std::move(c));
    }
    case FuzzUtility::kCoverage: {
      int elements = static_cast<int>(rng.Uniform(2, 6));
      std::vector<Rational> weights(elements);
      for (auto& x : weights) x = MakeRational(static_cast<long>(rng.Uniform(1, 4)), 4);
      std::vector<std::vector<int>> covers(m);
      for (int j = 0; j < m; ++j) {
        Rational own = 0;
        int picks = static_cast<int>(rng.Uniform(0, 2));
        for (int p = 0; p < picks; ++p) {
          int e = static_cast<int>(rng.Below(elements));
          if (std::find(covers[j].begin(), covers[j].end(), e) != covers[j].end()) continue;
          if (own + weights[e] > 1) continue;
          own += weights[e];
          covers[j].push_back(e);
        }
      }
      return Utility::Coverage(m, std::move(weights), std::move(covers));
    }
  }
  throw ParameterError("unknown fuzz utility");
}

inline FeasibilityFamily RandomFamily(Rng& rng, FuzzFamily kind, int m, int k) {
  switch (kind) {
    case FuzzFamily::kCardinality:
      return FeasibilityFamily::Cardinality(m, k);
    case FuzzFamily::kPartition: {
      int groups = static_cast<int>(rng.Uniform(1, std::min(3, m)));
      std::vector<Committee> g(groups);
      for (int j = 0; j < m; ++j) {
        long slot = rng.Uniform(0, groups);  // == groups leaves j free
        if (slot < groups) g[slot].push_back(j);
      }
      std::vector<long> caps;
      for (int q = 0; q < groups; ++q) caps.push_back(rng.Uniform(0, std::max<long>(1, k - 1)));
      return FeasibilityFamily::Partition(m, k, g, caps);
    }
    case FuzzFamily::kPacking: {
      Committee row;
      for (int j = 0; j < m; ++j) {
        if (rng.Coin()) row.push_back(j);
      }
      return FeasibilityFamily::Packing(m, k, {ConstraintRow{row, rng.Uniform(0, std::max<long>(1, k - 1))}});
    }
    case FuzzFamily::kExplicit: {
      std::set<Committee> sets;
      int count = static_cast<int>(rng.Uniform(1, 8));
      for (int q = 0; q < count; ++q) {
        int size = static_cast<int>(rng.Uniform(0, k));
        Committee order = Range(m);
        rng.Shuffle(order);
        order.resize(size);
        sets.insert(Normalized(order));
      }
      return FeasibilityFamily::Explicit(m, k, std::vector<Committee>(sets.begin(), sets.end()));
    }
  }
  throw ParameterError("unknown fuzz family");
}

struct FuzzSpec {
  int min_n = 1, max_n = 6;
  int min_m = 2, max_m = 8;
  int min_k = 1, max_k = 4;
  std::vector<FuzzUtility> utilities = {FuzzUtility::kApproval};
  std::vector<FuzzFamily> families = {FuzzFamily::kCardinality};
  bool mix_utilities = false;  // one kind per voter instead of per instance
};

inline std::vector<std::string> DefaultIds(int m) {
  std::vector<std::string> ids;
  for (int j = 0; j < m; ++j) ids.push_back("c" + std::to_string(j));
  return ids;
}

inline Instance RandomInstance(Rng& rng, const FuzzSpec& spec) {
  int n = static_cast<int>(rng.Uniform(spec.min_n, spec.max_n));
  int m = static_cast<int>(rng.Uniform(spec.min_m, spec.max_m));
  int k = static_cast<int>(rng.Uniform(spec.min_k, std::min(spec.max_k, m)));
  FuzzUtility base = spec.utilities[rng.Below(spec.utilities.size())];
  std::vector<Utility> utilities;
  for (int i = 0; i < n; ++i) {
    FuzzUtility kind = spec.mix_utilities ? spec.utilities[rng.Below(spec.utilities.size())] : base;
    utilities.push_back(RandomUtility(rng, kind, m));
  }
  FuzzFamily fam = spec.families[rng.Below(spec.families.size())];
  return Instance::WithK(DefaultIds(m), std::move(utilities), RandomFamily(rng, fam, m, k));
}

// A random budget-mode instance with integer sizes in [1, 3].
inline Instance RandomBudgetInstance(Rng& rng, int max_n, int max_m, FuzzUtility kind) {
  int n = static_cast<int>(rng.Uniform(1, max_n));
  int m = static_cast<int>(rng.Uniform(2, max_m));
  std::vector<Utility> utilities;
  for (int i = 0; i < n; ++i) utilities.push_back(RandomUtility(rng, kind, m));
  std::vector<Rational> sizes;
  Rational total = 0;
  for (int j = 0; j < m; ++j) {
    sizes.push_back(Rational(rng.Uniform(1, 3)));
    total += sizes.back();
  }
  Rational budget = Rational(rng.Uniform(1, std::max<long>(1, total.get_num().get_si())));
  return Instance::WithBudget(DefaultIds(m), std::move(utilities), FeasibilityFamily::Cardinality(m, m),
                              std::move(sizes), budget);
}

}  // namespace nashcore

#endif  // NASHCORE_GENERATORS_H_
