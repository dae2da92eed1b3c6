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

#ifndef NASHCORE_UTILITY_H_
#define NASHCORE_UTILITY_H_

#include <bit>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "nashcore/committee.h"
#include "nashcore/errors.h"
#include "nashcore/rational.h"
#include "nashcore/surd.h"

namespace nashcore {

enum class UtilityKind { kApproval, kAdditive, kCoverage, kXos, kTable, kLb00 };

inline const char* UtilityKindName(UtilityKind kind) {
  switch (kind) {
    case UtilityKind::kApproval: return "approval";
    case UtilityKind::kAdditive: return "additive";
    case UtilityKind::kCoverage: return "coverage";
    case UtilityKind::kXos: return "xos";
    case UtilityKind::kTable: return "table";
    case UtilityKind::kLb00: return "lb00";
  }
  return "unknown";
}

// z = (3/4)^(beta/2). Rational for even beta, a multiple of sqrt(3) for odd.
inline Surd Lb00Z(int beta) {
  if (beta % 2 == 0) return Surd(Pow(MakeRational(3, 4), beta / 2));
  Rational coeff = Pow(MakeRational(3, 4), (beta - 1) / 2) / 2;
  return Surd(Rational(0), coeff, 3);
}

// Value of the parametric lb00 utility when `own` candidates of the first
// party and `other` of the second are chosen.
inline Surd Lb00Value(int beta, long r, long own, long other) {
  Rational xa = Pow(Rational(own, r), beta);
  Rational xb = Pow(Rational(other, r), beta);
  Rational scale(r, beta);
  scale.canonicalize();
  return Surd(scale * xa) + Surd(scale * (1 - xa) * xb) * Lb00Z(beta);
}

// A voter's utility oracle over candidates {0..m-1}. Immutable after
// construction; every kind guarantees u(empty) = 0 and nonnegative values.
class Utility {
 public:
  static Utility Approval(int m, Committee approved) {
    Utility u(UtilityKind::kApproval, m);
    u.set_ = Normalized(std::move(approved));
    u.CheckIndices(u.set_);
    if (m <= 64) u.mask_ = ToMask(u.set_);
    return u;
  }

  static Utility Additive(std::vector<Rational> weights) {
    Utility u(UtilityKind::kAdditive, static_cast<int>(weights.size()));
    for (auto& w : weights) {
      if (w < 0 || w > 1) {
        throw MalformedUtilityError("additive weight " + ToString(w) + " outside [0,1]");
      }
    }
    u.weights_ = std::move(weights);
    return u;
  }

  // covers[j] lists the elements covered by candidate j.
  static Utility Coverage(int m, std::vector<Rational> element_weights,
                          std::vector<std::vector<int>> covers) {
    Utility u(UtilityKind::kCoverage, m);
    if (static_cast<int>(covers.size()) != m) {
      throw MalformedUtilityError("coverage needs one cover list per candidate");
    }
    for (auto& w : element_weights) {
      if (w < 0) throw MalformedUtilityError("negative element weight");
    }
    for (auto& c : covers) {
      c = Normalized(std::move(c));
      Rational own = 0;
      for (int e : c) {
        if (e < 0 || e >= static_cast<int>(element_weights.size())) {
          throw MalformedUtilityError("coverage element index out of range");
        }
        own += element_weights[e];
      }
      if (own > 1) {
        throw MalformedUtilityError("coverage candidate weight " + ToString(own) + " exceeds 1");
      }
    }
    u.weights_ = std::move(element_weights);
    u.lists_ = std::move(covers);
    return u;
  }

  static Utility Xos(std::vector<std::vector<Rational>> clauses) {
    if (clauses.empty()) throw MalformedUtilityError("xos needs at least one clause");
    int m = static_cast<int>(clauses[0].size());
    Utility u(UtilityKind::kXos, m);
    for (auto& c : clauses) {
      if (static_cast<int>(c.size()) != m) throw MalformedUtilityError("ragged xos clauses");
      for (auto& w : c) {
        if (w < 0 || w > 1) {
          throw MalformedUtilityError("xos weight " + ToString(w) + " outside [0,1]");
        }
      }
    }
    u.clauses_ = std::move(clauses);
    return u;
  }

  // Explicit table over subsets of `support`; T is evaluated as T ∩ support.
  static Utility Table(int m, Committee support, std::map<Committee, Rational> entries) {
    Utility u(UtilityKind::kTable, m);
    u.set_ = Normalized(std::move(support));
    u.CheckIndices(u.set_);
    if (u.set_.size() > 20) throw MalformedUtilityError("table utility supports at most 20 candidates");
    for (const auto& [set, value] : entries) {
      if (Normalized(set) != set || !IsSubset(set, u.set_)) {
        throw MalformedUtilityError("table entry " + FormatCommittee(set) + " outside its support");
      }
      if (value < 0) throw MalformedUtilityError("negative table value");
      if (set.empty() && value != 0) throw MalformedUtilityError("table must map the empty set to 0");
    }
    entries[Committee{}] = 0;
    u.table_ = std::move(entries);
    return u;
  }

  // party_of[j] is the party index of candidate j or -1.
  static Utility Lb00(int beta, long r, int party_a, int party_b, std::vector<int> party_of,
                      std::vector<std::string> party_names) {
    if (beta < 1 || r < 1) throw MalformedUtilityError("lb00 needs beta >= 1 and r >= 1");
    int parties = static_cast<int>(party_names.size());
    if (party_a < 0 || party_a >= parties || party_b < 0 || party_b >= parties || party_a == party_b) {
      throw MalformedUtilityError("lb00 role must name two distinct parties");
    }
    Utility u(UtilityKind::kLb00, static_cast<int>(party_of.size()));
    std::vector<long> sizes(parties, 0);
    for (int p : party_of) {
      if (p < -1 || p >= parties) throw MalformedUtilityError("lb00 party index out of range");
      if (p >= 0) ++sizes[p];
    }
    for (long s : sizes) {
      if (s > r) throw MalformedUtilityError("lb00 party larger than r");
    }
    u.beta_ = beta;
    u.r_ = r;
    u.party_a_ = party_a;
    u.party_b_ = party_b;
    u.party_of_ = std::move(party_of);
    u.party_names_ = std::move(party_names);
    for (long a = 0; a <= r; ++a) {
      for (long b = 0; b <= r; ++b) u.lb00_values_.push_back(Lb00Value(beta, r, a, b));
    }
    return u;
  }

  UtilityKind kind() const { return kind_; }
  int num_candidates() const { return m_; }

  Surd Evaluate(const Committee& t) const {
    switch (kind_) {
      case UtilityKind::kApproval: {
        long count = 0;
        auto it = set_.begin();
        for (int x : t) {
          while (it != set_.end() && *it < x) ++it;
          if (it != set_.end() && *it == x) ++count;
        }
        return Surd(count);
      }
      case UtilityKind::kAdditive: {
        Rational s = 0;
        for (int x : t) s += weights_.at(x);
        return Surd(s);
      }
      case UtilityKind::kCoverage: {
        std::vector<char> hit(weights_.size(), 0);
        Rational s = 0;
        for (int x : t) {
          for (int e : lists_.at(x)) {
            if (!hit[e]) {
              hit[e] = 1;
              s += weights_[e];
            }
          }
        }
        return Surd(s);
      }
      case UtilityKind::kXos: {
        Rational best = 0;
        for (const auto& clause : clauses_) {
          Rational s = 0;
          for (int x : t) s += clause.at(x);
          if (s > best) best = s;
        }
        return Surd(best);
      }
      case UtilityKind::kTable: {
        Committee key = Intersection(t, set_);
        auto it = table_.find(key);
        if (it == table_.end()) {
          throw MalformedUtilityError("table utility has no entry for " + FormatCommittee(key));
        }
        return Surd(it->second);
      }
      case UtilityKind::kLb00: {
        long a = 0, b = 0;
        for (int x : t) {
          int p = party_of_.at(x);
          if (p == party_a_) ++a;
          if (p == party_b_) ++b;
        }
        return lb00_values_[a * (r_ + 1) + b];
      }
    }
    return Surd();
  }

  Surd EvaluateMask(Mask m) const {
    if (kind_ == UtilityKind::kApproval && m_ <= 64) {
      return Surd(static_cast<long>(std::popcount(m & mask_)));
    }
    return Evaluate(FromMask(m));
  }

  // Candidates whose presence can change the value.
  Committee Support() const {
    Committee out;
    switch (kind_) {
      case UtilityKind::kApproval:
      case UtilityKind::kTable:
        return set_;
      case UtilityKind::kAdditive:
        for (int j = 0; j < m_; ++j) {
          if (weights_[j] != 0) out.push_back(j);
        }
        return out;
      case UtilityKind::kCoverage:
        for (int j = 0; j < m_; ++j) {
          for (int e : lists_[j]) {
            if (weights_[e] != 0) {
              out.push_back(j);
              break;
            }
          }
        }
        return out;
      case UtilityKind::kXos:
        for (int j = 0; j < m_; ++j) {
          for (const auto& c : clauses_) {
            if (c[j] != 0) {
              out.push_back(j);
              break;
            }
          }
        }
        return out;
      case UtilityKind::kLb00:
        for (int j = 0; j < m_; ++j) {
          if (party_of_[j] == party_a_ || party_of_[j] == party_b_) out.push_back(j);
        }
        return out;
    }
    return out;
  }

  // Per-candidate singleton values; defined for additive and approval.
  Rational Weight(int j) const {
    if (kind_ == UtilityKind::kAdditive) return weights_.at(j);
    if (kind_ == UtilityKind::kApproval) return Contains(set_, j) ? 1 : 0;
    throw RuleMismatchError("per-candidate weights need an additive utility");
  }

  bool IsAdditiveLike() const {
    return kind_ == UtilityKind::kAdditive || kind_ == UtilityKind::kApproval;
  }

  const Committee& approved() const { return set_; }
  const Committee& table_support() const { return set_; }
  const std::vector<Rational>& weights() const { return weights_; }
  const std::vector<std::vector<int>>& covers() const { return lists_; }
  const std::vector<std::vector<Rational>>& clauses() const { return clauses_; }
  const std::map<Committee, Rational>& table() const { return table_; }
  int beta() const { return beta_; }
  long r() const { return r_; }
  int party_a() const { return party_a_; }
  int party_b() const { return party_b_; }
  const std::vector<int>& party_of() const { return party_of_; }
  const std::vector<std::string>& party_names() const { return party_names_; }

 private:
  Utility(UtilityKind kind, int m) : kind_(kind), m_(m) {
    if (m < 1) throw MalformedUtilityError("utility over an empty candidate set");
  }

  void CheckIndices(const Committee& c) const {
    for (int x : c) {
      if (x < 0 || x >= m_) throw MalformedUtilityError("candidate index out of range");
    }
  }

  UtilityKind kind_;
  int m_;
  Committee set_;
  Mask mask_ = 0;
  std::vector<Rational> weights_;
  std::vector<std::vector<int>> lists_;
  std::vector<std::vector<Rational>> clauses_;
  std::map<Committee, Rational> table_;
  int beta_ = 0;
  long r_ = 0;
  int party_a_ = -1;
  int party_b_ = -1;
  std::vector<int> party_of_;
  std::vector<std::string> party_names_;
  std::vector<Surd> lb00_values_;
};

}  // namespace nashcore

#endif  // NASHCORE_UTILITY_H_
