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

// Random cross-check of every verifier against the naive oracles. Used by
// the unit tests and by the acceptance binary.

#ifndef NASHCORE_TESTS_EQUIVALENCE_H_
#define NASHCORE_TESTS_EQUIVALENCE_H_

#include <map>
#include <string>
#include <vector>

#include "nashcore/nashcore.h"
#include "oracles.h"

namespace equivalence {

using namespace nashcore;

struct Summary {
  long instances = 0;
  std::map<std::string, long> comparisons;  // per verifier
  std::map<std::string, long> blocked;      // of which the oracle found a block
  long mismatches = 0;
  long replay_failures = 0;
  std::vector<std::string> notes;  // first few problems
};

inline Committee PickFeasible(Rng& rng, const Instance& inst) {
  std::vector<Committee> all;
  for (const Committee& c : inst.family().AllFeasible()) {
    if (inst.IsFeasible(c)) all.push_back(c);
  }
  return all[rng.Below(all.size())];
}

inline void Compare(Summary& sum, const std::string& name, long index, bool library_pass, bool oracle_blocked,
                    bool replay_ok) {
  ++sum.comparisons[name];
  if (oracle_blocked) ++sum.blocked[name];
  if (library_pass == oracle_blocked) {
    ++sum.mismatches;
    if (sum.notes.size() < 5) sum.notes.push_back(name + " disagrees on instance " + std::to_string(index));
  }
  if (!library_pass && !replay_ok) {
    ++sum.replay_failures;
    if (sum.notes.size() < 5) sum.notes.push_back(name + " witness does not replay on instance " + std::to_string(index));
  }
}

inline Summary Run(long count, std::uint64_t seed) {
  Summary sum;
  const std::vector<Rational> gammas = {Rational(1), Rational(3, 2), Rational(2), ParseRational("2.7182818285")};
  const std::vector<Rational> thetas = {Rational(1), Rational(3, 2), Rational(2)};
  FuzzSpec general;
  general.max_n = 4;
  general.max_m = 6;
  general.utilities = {FuzzUtility::kApproval, FuzzUtility::kAdditive, FuzzUtility::kXos, FuzzUtility::kCoverage};
  general.families = {FuzzFamily::kCardinality, FuzzFamily::kPartition, FuzzFamily::kPacking, FuzzFamily::kExplicit};
  general.mix_utilities = true;
  FuzzSpec approval = general;
  approval.utilities = {FuzzUtility::kApproval};
  for (long x = 0; x < count; ++x) {
    Rng rng = Rng(seed).Split(static_cast<std::uint64_t>(x));
    ++sum.instances;

    Instance inst = RandomInstance(rng, general);
    Committee w = PickFeasible(rng, inst);
    Rational gamma = gammas[rng.Below(gammas.size())];
    VerifyOptions core_opts;
    core_opts.min_coalition_size = static_cast<int>(rng.Uniform(1, inst.n()));
    VerificationReport core = CheckCore(inst, w, gamma, core_opts);
    Compare(sum, "core", x, core.pass, oracle::CoreBlocked(inst, w, gamma, core_opts.min_coalition_size),
            ReplayReport(inst, w, core, core_opts));
    for (RestrainedMode mode : {RestrainedMode::kSubsetOfW, RestrainedMode::kAnyHatW}) {
      VerifyOptions o;
      o.mode = mode;
      VerificationReport r = CheckRestrainedCore(inst, w, gamma, o);
      Compare(sum, std::string("restrained-core/") + RestrainedModeName(mode), x, r.pass,
              oracle::RestrainedCoreBlocked(inst, w, gamma, mode == RestrainedMode::kAnyHatW),
              ReplayReport(inst, w, r, o));
    }

    Instance ainst = RandomInstance(rng, approval);
    Committee aw = PickFeasible(rng, ainst);
    for (RestrainedMode mode : {RestrainedMode::kSubsetOfW, RestrainedMode::kAnyHatW}) {
      VerifyOptions o;
      o.mode = mode;
      VerificationReport r = CheckRestrainedEjr(ainst, aw, o);
      Compare(sum, std::string("ejr/") + RestrainedModeName(mode), x, r.pass,
              oracle::RestrainedEjrBlocked(ainst, aw, mode == RestrainedMode::kAnyHatW),
              ReplayReport(ainst, aw, r, o));
    }

    FuzzUtility kind = general.utilities[rng.Below(general.utilities.size())];
    Instance binst = RandomBudgetInstance(rng, 4, 6, kind);
    Committee bw = PickFeasible(rng, binst);
    Rational theta = thetas[rng.Below(thetas.size())];
    for (bool weak : {false, true}) {
      VerifyOptions o;
      o.weak_endowment = weak;
      VerificationReport r = CheckEndowmentCore(binst, bw, theta, o);
      Compare(sum, weak ? "endowment/weak" : "endowment/strict", x, r.pass,
              oracle::EndowmentBlocked(binst, bw, theta, weak), ReplayReport(binst, bw, r, o));
    }
    VerificationReport pb = CheckPbCore(binst, bw, gamma);
    Compare(sum, "pb-core", x, pb.pass, oracle::PbCoreBlocked(binst, bw, gamma), ReplayReport(binst, bw, pb));
  }
  return sum;
}

}  // namespace equivalence

#endif  // NASHCORE_TESTS_EQUIVALENCE_H_
