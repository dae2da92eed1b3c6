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

#ifndef NASHCORE_INSTANCE_H_
#define NASHCORE_INSTANCE_H_

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "nashcore/axioms.h"
#include "nashcore/committee.h"
#include "nashcore/errors.h"
#include "nashcore/feasibility.h"
#include "nashcore/rational.h"
#include "nashcore/surd.h"
#include "nashcore/utility.h"

namespace nashcore {

enum class AxiomPolicy { kCheck, kTrust };

// An election: voters with utility oracles, candidates, a feasibility family
// and either a committee size k or per-candidate sizes with a budget.
class Instance {
 public:
  static Instance WithK(std::vector<std::string> candidates, std::vector<Utility> utilities,
                        FeasibilityFamily family, AxiomPolicy policy = AxiomPolicy::kCheck) {
    Instance inst(std::move(candidates), std::move(utilities), std::move(family), policy);
    inst.k_mode_ = true;
    return inst;
  }

  static Instance WithBudget(std::vector<std::string> candidates, std::vector<Utility> utilities,
                             FeasibilityFamily family, std::vector<Rational> sizes, Rational budget,
                             AxiomPolicy policy = AxiomPolicy::kCheck) {
    Instance inst(std::move(candidates), std::move(utilities), std::move(family), policy);
    if (static_cast<int>(sizes.size()) != inst.m()) throw ModeError("sizes must list every candidate");
    for (const auto& s : sizes) {
      if (s <= 0) throw ModeError("candidate sizes must be positive");
    }
    if (budget < 0) throw ModeError("negative budget");
    inst.k_mode_ = false;
    inst.sizes_ = std::move(sizes);
    inst.budget_ = std::move(budget);
    return inst;
  }

  int n() const { return static_cast<int>(utilities_.size()); }
  int m() const { return static_cast<int>(candidates_.size()); }
  bool k_mode() const { return k_mode_; }
  bool budget_mode() const { return !k_mode_; }

  int k() const {
    if (!k_mode_) throw ModeError("instance is in budget mode");
    return family_.k();
  }
  const std::vector<Rational>& sizes() const {
    if (k_mode_) throw ModeError("instance is in k mode");
    return sizes_;
  }
  const Rational& budget() const {
    if (k_mode_) throw ModeError("instance is in k mode");
    return budget_;
  }

  const std::vector<std::string>& candidates() const { return candidates_; }
  const std::string& candidate_id(int j) const { return candidates_.at(j); }
  const std::vector<Utility>& utilities() const { return utilities_; }
  const Utility& utility(int i) const { return utilities_.at(i); }
  const FeasibilityFamily& family() const { return family_; }
  AxiomPolicy policy() const { return policy_; }
  const std::vector<std::string>& notes() const { return notes_; }

  Rational Cost(const Committee& t) const {
    if (k_mode_) return Rational(static_cast<long>(t.size()));
    Rational c = 0;
    for (int x : t) c += sizes_.at(x);
    return c;
  }

  bool IsFeasible(const Committee& t) const {
    if (!family_.IsFeasible(t)) return false;
    return k_mode_ || Cost(t) <= budget_;
  }

  Surd Value(int voter, const Committee& t) const { return utilities_.at(voter).Evaluate(t); }

  std::vector<Surd> Values(const Committee& t) const {
    std::vector<Surd> out;
    out.reserve(utilities_.size());
    for (const auto& u : utilities_) out.push_back(u.Evaluate(t));
    return out;
  }

  int IndexOf(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw FormatError("unknown candidate id '" + id + "'");
    return it->second;
  }

  Committee CommitteeOf(const std::vector<std::string>& ids) const {
    Committee c;
    for (const auto& id : ids) c.push_back(IndexOf(id));
    Committee n = Normalized(c);
    if (n.size() != c.size()) throw FormatError("duplicate candidate in committee");
    return n;
  }

  std::vector<std::string> IdsOf(const Committee& c) const {
    std::vector<std::string> out;
    for (int x : c) out.push_back(candidates_.at(x));
    return out;
  }

  // Unit sizes and b = k; used when a budget-mode notion is applied to a
  // k-mode instance.
  Instance LiftToBudget() const {
    if (!k_mode_) return *this;
    Instance lifted = *this;
    lifted.k_mode_ = false;
    lifted.sizes_.assign(m(), Rational(1));
    lifted.budget_ = Rational(family_.k());
    lifted.family_ = family_.WithK(m());
    return lifted;
  }

 private:
  Instance(std::vector<std::string> candidates, std::vector<Utility> utilities, FeasibilityFamily family,
           AxiomPolicy policy)
      : candidates_(std::move(candidates)),
        utilities_(std::move(utilities)),
        family_(std::move(family)),
        policy_(policy) {
    if (candidates_.empty()) throw FormatError("instance needs at least one candidate");
    if (utilities_.empty()) throw FormatError("instance needs at least one voter");
    for (size_t j = 0; j < candidates_.size(); ++j) {
      if (!index_.emplace(candidates_[j], static_cast<int>(j)).second) {
        throw FormatError("duplicate candidate id '" + candidates_[j] + "'");
      }
    }
    if (family_.m() != m()) throw FormatError("constraint built for a different candidate count");
    for (size_t i = 0; i < utilities_.size(); ++i) {
      if (utilities_[i].num_candidates() != m()) {
        throw MalformedUtilityError("utility " + std::to_string(i) + " has the wrong candidate count");
      }
      if (policy_ == AxiomPolicy::kCheck) CheckUtility(static_cast<int>(i));
    }
  }

  // Approval, additive, coverage and XOS satisfy both axioms by their
  // validated structure. Tables are checked exhaustively; lb00 utilities
  // are checked exhaustively when their support has at most 16 members.
  void CheckUtility(int i) {
    const Utility& u = utilities_[i];
    if (u.kind() != UtilityKind::kTable && u.kind() != UtilityKind::kLb00) return;
    Committee support = u.Support();
    if (u.kind() == UtilityKind::kLb00 && support.size() > 16) {
      notes_.push_back("lb00 utility " + std::to_string(i) + " trusted by construction (support " +
                       std::to_string(support.size()) + ")");
      return;
    }
    AxiomReport report = CheckAxioms(u, support);
    if (!report.monotone) {
      throw MalformedUtilityError("utility " + std::to_string(i) + " is not monotone at T=" +
                                  FormatCommittee(report.monotone_witness->t) +
                                  " j=" + std::to_string(report.monotone_witness->j));
    }
    if (!report.lipschitz) {
      throw MalformedUtilityError("utility " + std::to_string(i) + " is not 1-Lipschitz at T=" +
                                  FormatCommittee(report.lipschitz_witness->t) +
                                  " j=" + std::to_string(report.lipschitz_witness->j));
    }
  }

  std::vector<std::string> candidates_;
  std::vector<Utility> utilities_;
  FeasibilityFamily family_;
  AxiomPolicy policy_;
  bool k_mode_ = true;
  std::vector<Rational> sizes_;
  Rational budget_ = 0;
  std::unordered_map<std::string, int> index_;
  std::vector<std::string> notes_;
};

}  // namespace nashcore

#endif  // NASHCORE_INSTANCE_H_
