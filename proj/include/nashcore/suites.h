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

// Property suites: each one draws seeded random instances (or builds the
// fixed constructions), runs a solver, and checks a stability or inequality
// claim exactly. Results are JSON so the CLI can emit them unchanged.

#ifndef NASHCORE_SUITES_H_
#define NASHCORE_SUITES_H_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "nashcore/axioms.h"
#include "nashcore/generators.h"
#include "nashcore/json_io.h"
#include "nashcore/lemmas.h"
#include "nashcore/party_profile.h"
#include "nashcore/sampling.h"
#include "nashcore/scoring.h"
#include "nashcore/solvers.h"
#include "nashcore/verifiers.h"

namespace nashcore {

struct SuiteOptions {
  long count = 0;  // instances, points or trials; 0 picks the suite default
  std::uint64_t seed = 0;
  int jobs = 1;
};

struct SuiteResult {
  std::string name;
  bool pass = true;
  long cases = 0;
  long failures = 0;
  Json details = Json::object();
};

// The rational upper bound on e used for the global-rule property.
inline Rational EUpperBound() { return ParseRational("2.7182818285"); }

namespace suite_internal {

inline long Or(long value, long fallback) { return value > 0 ? value : fallback; }

inline Json Counts(long cases, long failures) { return Json{{"cases", cases}, {"failures", failures}}; }

inline void Record(SuiteResult& r, bool ok, const std::function<Json()>& describe) {
  ++r.cases;
  if (ok) return;
  ++r.failures;
  r.pass = false;
  if (!r.details.contains("first_failures")) r.details["first_failures"] = Json::array();
  if (r.details["first_failures"].size() < 5) r.details["first_failures"].push_back(describe());
}

inline SolverConfig LocalConfig(Rule rule) {
  SolverConfig cfg;
  cfg.rule = rule;
  cfg.method = Method::kLocal;
  return cfg;
}

inline Json Describe(const Instance& inst, const Committee& w) {
  return Json{{"instance", InstanceToJson(inst)}, {"committee", CommitteeToJson(inst, w)}};
}

}  // namespace suite_internal

// Global snw lies in the e-approximate restrained core for arbitrary
// families (approval, additive and XOS voters).
inline SuiteResult SuiteMain1(const SuiteOptions& o) {
  using namespace suite_internal;
  SuiteResult r{"main1"};
  Rational gamma = EUpperBound();
  FuzzSpec spec;
  spec.utilities = {FuzzUtility::kApproval, FuzzUtility::kAdditive, FuzzUtility::kXos};
  spec.families = {FuzzFamily::kCardinality, FuzzFamily::kPartition, FuzzFamily::kPacking, FuzzFamily::kExplicit};
  long vacuous = 0;
  std::uint64_t enumerated = 0;
  for (long s = 0; s < Or(o.count, 200); ++s) {
    Rng rng = Rng(o.seed).Split(static_cast<std::uint64_t>(s));
    Instance inst = RandomInstance(rng, spec);
    Committee w = SolveGlobal(inst, Rule::kSnw).committee;
    VerifyOptions vo;
    vo.jobs = o.jobs;
    VerificationReport rep = CheckRestrainedCore(inst, w, gamma, vo);
    vacuous += rep.vacuous_coalitions;
    enumerated += rep.sets_enumerated;
    Record(r, rep.pass, [&] { return Describe(inst, w); });
  }
  r.details["gamma"] = ToString(gamma);
  r.details["vacuous_coalitions"] = vacuous;
  r.details["sets_enumerated"] = enumerated;
  return r;
}

// Local snw over a partition matroid with coverage voters lies in the
// 2-approximate restrained core, from every start.
inline SuiteResult SuiteMatroid(const SuiteOptions& o) {
  using namespace suite_internal;
  SuiteResult r{"matroid"};
  FuzzSpec spec;
  spec.utilities = {FuzzUtility::kCoverage};
  spec.families = {FuzzFamily::kPartition};
  long runs = 0;
  for (long s = 0; s < Or(o.count, 100); ++s) {
    Rng rng = Rng(o.seed).Split(static_cast<std::uint64_t>(s));
    Instance inst = RandomInstance(rng, spec);
    for (const Committee& start : LocalStarts(inst.family(), o.seed + static_cast<std::uint64_t>(s), 5)) {
      SolverConfig cfg = LocalConfig(Rule::kSnw);
      cfg.start = start;
      Committee w = SolveLocal(inst, cfg).committee;
      VerifyOptions vo;
      vo.jobs = o.jobs;
      bool ok = CheckRestrainedCore(inst, w, Rational(2), vo).pass;
      ++runs;
      if (!ok) {
        Record(r, false, [&] { return Describe(inst, w); });
        --r.cases;
      }
    }
    ++r.cases;
  }
  r.details["local_runs"] = runs;
  return r;
}

// Local pav over a partition matroid with approval voters satisfies
// restrained EJR.
inline SuiteResult SuiteEjr(const SuiteOptions& o) {
  using namespace suite_internal;
  SuiteResult r{"ejr"};
  FuzzSpec spec;
  spec.utilities = {FuzzUtility::kApproval};
  spec.families = {FuzzFamily::kPartition};
  for (long s = 0; s < Or(o.count, 100); ++s) {
    Rng rng = Rng(o.seed).Split(static_cast<std::uint64_t>(s));
    Instance inst = RandomInstance(rng, spec);
    Committee w = SolveLocal(inst, LocalConfig(Rule::kPav)).committee;
    VerifyOptions vo;
    vo.jobs = o.jobs;
    Record(r, CheckRestrainedEjr(inst, w, vo).pass, [&] { return Describe(inst, w); });
  }
  return r;
}

struct TightLowerResult {
  long n = 0, y = 0, k = 0, m = 0;
  bool local_optimum = false;
  bool coalition_large_enough = false;
  bool blocks = false;
  Rational best_factor;  // min over V_1 of u(T) / (u(W) + 1)
};

inline TightLowerResult CheckTightLower(const Rational& alpha, const Rational& eps,
                                        std::optional<long> n_override = std::nullopt) {
  auto [inst, L] = GenTight2Alpha(alpha, eps, n_override);
  TightLowerResult out;
  out.n = L.n;
  out.y = L.y;
  out.k = L.k;
  out.m = inst.m();
  out.local_optimum = !FindImprovingSwap(inst, Rule::kGpav, L.w).has_value();
  out.coalition_large_enough = Rational(static_cast<long>(L.v1.size())) >= alpha * L.n;
  out.blocks = ReplayCoreBlock(inst, L.w, 2 - alpha - eps, L.v1, L.deviation);
  bool first = true;
  for (int i : L.v1) {
    Rational f = inst.Value(i, L.deviation).ToRational() / (inst.Value(i, L.w).ToRational() + 1);
    if (first || f < out.best_factor) out.best_factor = f;
    first = false;
  }
  return out;
}

// Both directions of the 2 - alpha bound for gpav with additive voters.
inline SuiteResult SuiteTight(const SuiteOptions& o) {
  using namespace suite_internal;
  SuiteResult r{"tight"};
  FuzzSpec spec;
  spec.utilities = {FuzzUtility::kAdditive};
  spec.families = {FuzzFamily::kCardinality};
  spec.min_m = 2;
  Json upper = Json::object();
  for (Rational alpha : {Rational(1, 4), Rational(1, 2), Rational(1)}) {
    long before = r.failures, cases = 0;
    for (long s = 0; s < Or(o.count, 100); ++s) {
      Rng rng = Rng(o.seed).Split(static_cast<std::uint64_t>(s));
      Instance inst = RandomInstance(rng, spec);
      Committee w = SolveLocal(inst, LocalConfig(Rule::kGpav)).committee;
      VerifyOptions vo;
      vo.jobs = o.jobs;
      vo.min_coalition_size = static_cast<int>(Ceil(alpha * inst.n()).get_si());
      Record(r, CheckCore(inst, w, 2 - alpha, vo).pass, [&] { return Describe(inst, w); });
      ++cases;
    }
    upper[ToString(alpha)] = Counts(cases, r.failures - before);
  }
  r.details["upper"] = upper;
  Json lower = Json::array();
  for (std::optional<long> n_override : {std::optional<long>(), std::optional<long>(4)}) {
    TightLowerResult t = CheckTightLower(Rational(1, 2), Rational(1, 2), n_override);
    bool ok = t.local_optimum && t.coalition_large_enough && t.blocks;
    Record(r, ok, [&] { return Json{{"n", t.n}}; });
    lower.push_back(Json{{"alpha", "1/2"}, {"epsilon", "1/2"}, {"n", t.n}, {"y", t.y}, {"k", t.k}, {"m", t.m},
                         {"local_optimum", t.local_optimum}, {"coalition_blocks", t.blocks},
                         {"blocking_factor", ToString(t.best_factor)}});
  }
  r.details["lower"] = lower;
  return r;
}

// Random inputs meeting each lemma's premise; every check must be decided
// in the lemma's favor.
inline SuiteResult SuiteLemmas(const SuiteOptions& o) {
  using namespace suite_internal;
  SuiteResult r{"lemmas"};
  long target = Or(o.count, 500);
  Json per = Json::object();
  auto run = [&](const std::string& name, const std::function<LemmaCheck(Rng&)>& draw) {
    long cases = 0, failures = 0, straddles = 0, attempts = 0;
    Rng base = Rng(o.seed).Split(std::hash<std::string>{}(name) & 0xffffffff);
    while (cases < target) {
      if (++attempts > target * 200) throw Error("could not meet the premise of " + name);
      Rng rng = base.Split(static_cast<std::uint64_t>(attempts));
      LemmaCheck c = draw(rng);
      if (!c.premise) continue;
      ++cases;
      straddles += c.straddle;
      Record(r, c.holds, [&] { return Json{{"lemma", name}, {"detail", c.detail}}; });
      if (!c.holds) ++failures;
    }
    per[name] = Json{{"cases", cases}, {"failures", failures}, {"undecided", straddles}};
  };
  auto random_committee = [](Rng& rng, int m, int max_size) {
    Committee order = Range(m);
    rng.Shuffle(order);
    order.resize(static_cast<size_t>(rng.Uniform(0, std::min(m, max_size))));
    return Normalized(order);
  };
  FuzzSpec any;
  any.utilities = {FuzzUtility::kApproval, FuzzUtility::kAdditive, FuzzUtility::kXos, FuzzUtility::kCoverage};
  FuzzSpec additive;
  additive.utilities = {FuzzUtility::kAdditive};
  FuzzSpec submodular;
  submodular.utilities = {FuzzUtility::kApproval, FuzzUtility::kAdditive, FuzzUtility::kCoverage};
  submodular.mix_utilities = true;

  run("smoothed_log", [&](Rng& rng) {
    Instance inst = RandomInstance(rng, any);
    Committee w = random_committee(rng, inst.m(), inst.k());
    if (w.empty()) return LemmaCheck{};
    int i = static_cast<int>(rng.Below(inst.n()));
    int j = w[rng.Below(w.size())];
    return CheckSmoothedLog(inst, w, i, j);
  });
  run("nabla", [&](Rng& rng) {
    Instance inst = RandomInstance(rng, additive);
    Committee w = random_committee(rng, inst.m(), inst.m());
    return CheckNabla(inst, w, static_cast<int>(rng.Below(inst.n())));
  });
  run("2_abc", [&](Rng& rng) {
    Instance inst = RandomInstance(rng, additive);
    Committee w = random_committee(rng, inst.m(), inst.m());
    return Check2Abc(inst, w, static_cast<int>(rng.Below(inst.n())), static_cast<int>(rng.Below(inst.m())));
  });
  run("mat_nabla", [&](Rng& rng) {
    Instance inst = RandomInstance(rng, submodular);
    Committee order = Range(inst.m());
    rng.Shuffle(order);
    order.resize(inst.k());
    return CheckMatNabla(inst, Normalized(order));
  });
  run("mat_delta", [&](Rng& rng) {
    Instance inst = RandomInstance(rng, submodular);
    Committee w = random_committee(rng, inst.m(), inst.k());
    Committee rest = Difference(Range(inst.m()), w);
    rng.Shuffle(rest);
    rest.resize(static_cast<size_t>(rng.Uniform(1, static_cast<long>(rest.size()))));
    Committee t = Normalized(rest);
    std::vector<int> s;
    for (int i = 0; i < inst.n(); ++i) {
      if (inst.Value(i, Union(t, w)) >= Surd(2) * (inst.Value(i, w) + Surd(1))) s.push_back(i);
    }
    return CheckMatDelta(inst, w, s, t);
  });
  run("M2", [&](Rng& rng) {
    Instance inst = RandomInstance(rng, additive);
    Committee w = SolveLocal(inst, LocalConfig(Rule::kGpav)).committee;
    std::vector<int> s;
    for (int i = 0; i < inst.n(); ++i) {
      if (rng.Coin()) s.push_back(i);
    }
    if (s.empty()) s.push_back(static_cast<int>(rng.Below(inst.n())));
    int limit = static_cast<int>(static_cast<long>(s.size()) * inst.k() / inst.n());
    Committee t = random_committee(rng, inst.m(), limit);
    return CheckM2(inst, w, s, t);
  });
  r.details["lemmas"] = per;
  return r;
}

inline Instance SamplingUniverse(Rng& rng, FuzzUtility kind, int m) {
  std::vector<Utility> utilities{RandomUtility(rng, kind, m)};
  return Instance::WithK(DefaultIds(m), std::move(utilities), FeasibilityFamily::Cardinality(m, m));
}

// The exact sampling bound per utility kind, and the Monte-Carlo lower tail.
inline SuiteResult SuiteSampling(const SuiteOptions& o) {
  using namespace suite_internal;
  SuiteResult r{"sampling"};
  long target = Or(o.count, 500);
  const std::vector<Rational> alphas = {Rational(1, 4), Rational(1, 3), Rational(1, 2), Rational(2, 3),
                                        Rational(3, 4)};
  Json bound = Json::object();
  for (FuzzUtility kind : {FuzzUtility::kApproval, FuzzUtility::kAdditive, FuzzUtility::kXos,
                           FuzzUtility::kCoverage}) {
    long before = r.failures;
    for (long s = 0; s < target; ++s) {
      Rng rng = Rng(o.seed).Split(static_cast<std::uint64_t>(s) * 8 + static_cast<std::uint64_t>(kind));
      int m = static_cast<int>(rng.Uniform(1, 10));
      Utility u = RandomUtility(rng, kind, m);
      Committee t = Range(static_cast<int>(rng.Uniform(1, m)));
      Rational alpha = alphas[rng.Below(alphas.size())];
      SamplingBoundReport rep = VerifySamplingBound(u, t, alpha, 1);
      Record(r, rep.holds, [&] { return Json{{"kind", FuzzUtilityName(kind)}, {"alpha", ToString(alpha)}}; });
    }
    bound[FuzzUtilityName(kind)] = Counts(target, r.failures - before);
  }
  {
    // lb00 voters over the first two parties, beta = 5.
    Instance inst = GenLb00(5, 2);
    SamplingBoundReport rep = VerifySamplingBound(inst.utility(0), Range(12), Rational(1, 3), 5);
    Record(r, rep.holds, [] { return Json{{"kind", "lb00"}}; });
    bound["lb00"] = Json{{"cases", 1}, {"holds", rep.holds},
                         {"self_bounding_constant", rep.self_bounding_constant.ToString()}};
  }
  r.details["sampling_bound"] = bound;

  long trials = 100000;
  Json tails = Json::array();
  struct TailCase {
    std::string name;
    Utility u;
    Committee t;
    Rational alpha, delta;
  };
  std::vector<TailCase> cases;
  cases.push_back({"additive-16x1", Utility::Additive(std::vector<Rational>(16, Rational(1))), Range(16),
                   Rational(1, 2), Rational(9, 10)});
  cases.push_back({"additive-16x1-mid", Utility::Additive(std::vector<Rational>(16, Rational(1))), Range(16),
                   Rational(1, 2), Rational(1, 2)});
  cases.push_back({"approval-12", Utility::Approval(12, Range(12)), Range(12), Rational(1, 3), Rational(3, 4)});
  {
    Rng rng = Rng(o.seed).Split(777);
    cases.push_back({"coverage-12", RandomUtility(rng, FuzzUtility::kCoverage, 12), Range(12), Rational(1, 2),
                     Rational(1, 2)});
    cases.push_back({"xos-12", RandomUtility(rng, FuzzUtility::kXos, 12), Range(12), Rational(2, 3),
                     Rational(1, 2)});
  }
  for (size_t c = 0; c < cases.size(); ++c) {
    const auto& tc = cases[c];
    LowerTailReport rep = McLowerTail(tc.u, tc.t, tc.alpha, tc.delta, 1, trials, o.seed + c, o.jobs);
    Record(r, rep.verdict == TailVerdict::kPass, [&] { return Json{{"tail", tc.name}}; });
    tails.push_back(Json{{"name", tc.name}, {"mu0", rep.mu0.ToString()}, {"trials", rep.trials},
                         {"hits", rep.hits}, {"bound", rep.bound.ToString()},
                         {"allowance", rep.allowance.ToString()}, {"verdict", TailVerdictName(rep.verdict)}});
  }
  r.details["lower_tail"] = tails;
  return r;
}

struct Lb00Result {
  int beta = 0, r = 0;
  bool monotone = false, lipschitz = false;
  Surd self_bounding;
  bool self_bounding_ok = false;
  Lb00CompositionReport compositions;
  bool worst_replays = false;  // the worst committee is blocked at its own factor
};

inline Lb00Result CheckLb00(int beta, int r) {
  Lb00Result out;
  out.beta = beta;
  out.r = r;
  Instance inst = GenLb00(beta, r, AxiomPolicy::kTrust);
  out.monotone = out.lipschitz = true;
  out.self_bounding = Surd(0);
  for (int i = 0; i < inst.n(); ++i) {
    AxiomReport a = CheckAxioms(inst.utility(i), Range(inst.m()));
    out.monotone = out.monotone && a.monotone && a.exhaustive;
    out.lipschitz = out.lipschitz && a.lipschitz && a.exhaustive;
    Surd sb = SelfBoundingConstant(inst.utility(i), Range(inst.m()));
    if (out.self_bounding < sb) out.self_bounding = sb;
  }
  out.self_bounding_ok = out.self_bounding <= Surd(beta);
  out.compositions = CheckLb00Compositions(beta, r);
  // Replay the deviation behind the smallest factor on the real instance.
  const auto& c = out.compositions.worst_counts;
  Committee w = Lb00Committee(r, c);
  out.worst_replays = false;
  for (int tri = 0; tri < 2 && !out.worst_replays; ++tri) {
    for (int i = 0; i < 3 && !out.worst_replays; ++i) {
      int x = 3 * tri + i, y = 3 * tri + (i + 1) % 3, z = 3 * tri + (i + 2) % 3;
      if (4 * c[x] > 3 * r || 4 * c[y] > 3 * r) continue;
      std::vector<int> s;
      for (int v = 0; v < 6; ++v) {
        if ((kLb00Roles[v][0] == x && kLb00Roles[v][1] == y) || (kLb00Roles[v][0] == y && kLb00Roles[v][1] == z)) {
          s.push_back(v);
        }
      }
      Committee t;
      for (int l = 0; l < r; ++l) t.push_back(y * r + l);
      // The factor is exact but may be irrational; replay with the members'
      // own thresholds instead of a rational gamma.
      bool ok = static_cast<long>(t.size()) * inst.n() <= static_cast<long>(s.size()) * inst.k();
      for (int v : s) {
        ok = ok && inst.Value(v, t) >= out.compositions.min_gamma * (inst.Value(v, w) + Surd(1));
      }
      out.worst_replays = ok;
      break;
    }
    if (out.worst_replays) break;
  }
  return out;
}

inline Json Lb00ToJson(const Lb00Result& x) {
  return Json{{"beta", x.beta},
              {"r", x.r},
              {"monotone", x.monotone},
              {"lipschitz", x.lipschitz},
              {"self_bounding_constant", x.self_bounding.ToString()},
              {"compositions", x.compositions.compositions},
              {"ratio_bound", x.compositions.bound.ToString()},
              {"min_ratio", x.compositions.min_ratio.ToString()},
              {"ratio_ok", x.compositions.ratio_ok},
              {"min_factor_with_slack", x.compositions.min_gamma.ToString()},
              {"worst_committee_blocked", x.worst_replays}};
}

// The beta-self-bounding lower-bound construction.
inline SuiteResult SuiteLb00(const SuiteOptions&) {
  using namespace suite_internal;
  SuiteResult r{"lb00"};
  Json runs = Json::array();
  for (auto [beta, rr] : {std::pair{6, 2}, std::pair{6, 3}, std::pair{5, 2}}) {
    Lb00Result x = CheckLb00(beta, rr);
    bool ok = x.monotone && x.lipschitz && x.self_bounding_ok && x.compositions.ratio_ok && x.worst_replays;
    Record(r, ok, [&] { return Lb00ToJson(x); });
    runs.push_back(Lb00ToJson(x));
  }
  r.details["runs"] = runs;
  return r;
}

struct Lb1Result {
  long points = 0;
  std::map<std::string, long> per_case;
  long violations = 0;
  std::vector<UtiDeviationCheck> uti;
  bool uti_ok = false;
  PartyProfileReport profiles;
  bool profile_search_confirms = false;
};

inline Lb1Result CheckLb1(long points_per_case, std::uint64_t seed, bool run_profile_search = true) {
  Lb1Result out;
  const long r = 40;
  Rng rng(seed);
  auto check = [&](const std::array<Rational, 4>& u, const std::array<Rational, 3>& t) {
    Lb1Deviation d = ComputeLb1Deviation(u, t, Rational(r));
    auto c = Lb1Constraints(u, t, d.x, Rational(r));
    ++out.points;
    ++out.per_case[d.case_label];
    for (bool b : c) out.violations += b ? 0 : 1;
  };
  // Fixed points first: equal utilities and the smallest region corner.
  check({Rational(3 * r), Rational(3 * r), Rational(3 * r), Rational(3 * r)}, {Rational(0), Rational(0), Rational(0)});
  for (const char* target : {"1", "2", "3a", "3b"}) {
    for (long i = 0; i < points_per_case; ++i) {
      auto [u, t] = SampleLb1Point(rng, r, target);
      check(u, t);
    }
  }
  out.uti = CheckUtiLowerBound(static_cast<int>(r));
  out.uti_ok = true;
  for (const auto& c : out.uti) out.uti_ok = out.uti_ok && c.holds && c.bound_form;
  if (run_profile_search) {
    PartyProfileParams p;
    Lb1615Params lp = Lb1615Standard(5);
    p.pool = lp.cap;
    p.cap = lp.cap;
    p.k = lp.k;
    out.profiles = SearchPartyProfiles(p);
    out.profile_search_confirms = !out.profiles.cap_exceeded && out.profiles.any_w_passing == 0;
  }
  return out;
}

inline Json PartyCountsToJson(const std::optional<PartyCounts>& c) {
  if (!c) return nullptr;
  Json j = Json::object();
  for (int p = 0; p < 6; ++p) j[kLbParties[p]] = (*c)[p];
  return j;
}

inline Json Lb1ToJson(const Lb1Result& x) {
  Json cases = Json::object();
  for (const auto& [k, v] : x.per_case) cases[k] = v;
  Json uti = Json::array();
  for (const auto& c : x.uti) {
    uti.push_back(Json{{"coalition", c.coalition}, {"endowment", c.endowment}, {"hat_size", c.hat_size},
                       {"room", c.room}, {"largest_utility_below_bound", c.max_utility},
                       {"required", ToString(c.required)}, {"holds", c.holds}});
  }
  return Json{{"r", 40},
              {"points", x.points},
              {"per_case", cases},
              {"constraint_violations", x.violations},
              {"utility_lower_bound_deviations", uti},
              {"profile_search",
               Json{{"r", 5},
                    {"gamma", "16/15"},
                    {"profiles", x.profiles.profiles},
                    {"passing_any_hat", x.profiles.any_w_passing},
                    {"passing_subset_hat", x.profiles.subset_passing},
                    {"example_any_hat", PartyCountsToJson(x.profiles.first_any_w_pass)},
                    {"example_subset_hat", PartyCountsToJson(x.profiles.first_subset_pass)},
                    {"cap_exceeded", x.profiles.cap_exceeded},
                    {"seconds", static_cast<long>(x.profiles.seconds)},
                    {"confirms_empty_core", x.profile_search_confirms}}}};
}

// The 16/15 construction: case analysis, utility lower bounds, and the
// exhaustive down-scaled search.
inline SuiteResult SuiteLb1(const SuiteOptions& o) {
  SuiteResult r{"lb1"};
  Lb1Result x = CheckLb1(suite_internal::Or(o.count, 250), o.seed);
  r.cases = x.points + 2 + 1;
  r.failures = x.violations + (x.uti_ok ? 0 : 1) + (x.profile_search_confirms ? 0 : 1);
  r.pass = r.failures == 0;
  r.details = Lb1ToJson(x);
  r.details.erase("profile_search");
  r.details["profile_search"] = Lb1ToJson(x)["profile_search"];
  return r;
}

// The reduction constant and the sampling experiment behind it.
inline SuiteResult SuiteEndow2(const SuiteOptions& o) {
  using namespace suite_internal;
  SuiteResult r{"endow2"};
  Rational kappa = ParseRational("1.454"), eta = ParseRational("11.63");
  Json bounds = Json::array();
  for (int beta = 1; beta <= 5; ++beta) {
    Interval c = Endow2Bound(beta, kappa, eta);
    Rational limit = ParseRational("11.7") * beta * Pow(Rational(55), static_cast<unsigned long>(beta));
    bool ok = CertainlyLessEq(c, Interval(limit));
    Record(r, ok, [&] { return Json{{"beta", beta}}; });
    bounds.push_back(Json{{"beta", beta}, {"bound", c.ToString()}, {"limit", ToString(limit)}, {"holds", ok}});
  }
  r.details["bounds"] = bounds;
  r.details["base"] = Endow2Base(kappa, eta).ToString();

  Instance inst = Endow2SyntheticInstance(2, 700);
  Endow2Params p;
  p.kappa = Rational(727, 500);
  p.eta = Rational(1163, 100);
  p.phi = Rational(1);
  p.q = Rational(4, 5);
  p.trials = Or(o.count, 10000);
  p.seed = o.seed;
  Endow2Report rep = Endow2Experiment(inst, Committee{}, {0, 1}, Range(700), p);
  bool ok = rep.premises && rep.joint_hits > 0 && rep.witness_blocks;
  Record(r, ok, [] { return Json{{"experiment", "synthetic"}}; });
  r.details["experiment"] = Json{{"gamma", rep.gamma},
                                 {"premises", rep.premises},
                                 {"reduced_size", rep.reduced.size()},
                                 {"cost_cap", ToString(rep.cost_cap)},
                                 {"trials", rep.trials},
                                 {"coalition_event", rep.coalition_hits},
                                 {"cost_event", rep.cost_hits},
                                 {"joint_event", rep.joint_hits},
                                 {"witness_blocks_at_32", rep.witness_blocks}};
  return r;
}

inline const std::vector<std::string>& SuiteNames() {
  static const std::vector<std::string> names = {"main1", "matroid", "ejr",  "tight", "lemmas",
                                                 "sampling", "lb00", "lb1", "endow2"};
  return names;
}

inline SuiteResult RunSuite(const std::string& name, const SuiteOptions& o) {
  if (name == "main1") return SuiteMain1(o);
  if (name == "matroid") return SuiteMatroid(o);
  if (name == "ejr") return SuiteEjr(o);
  if (name == "tight") return SuiteTight(o);
  if (name == "lemmas") return SuiteLemmas(o);
  if (name == "sampling") return SuiteSampling(o);
  if (name == "lb00") return SuiteLb00(o);
  if (name == "lb1") return SuiteLb1(o);
  if (name == "endow2") return SuiteEndow2(o);
  throw FormatError("unknown suite '" + name + "'");
}

inline Json SuiteResultToJson(const SuiteResult& r) {
  return Json{{"suite", r.name}, {"pass", r.pass}, {"cases", r.cases}, {"failures", r.failures},
              {"details", r.details}};
}

}  // namespace nashcore

#endif  // NASHCORE_SUITES_H_
