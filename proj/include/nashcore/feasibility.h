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

#ifndef NASHCORE_FEASIBILITY_H_
#define NASHCORE_FEASIBILITY_H_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "nashcore/committee.h"
#include "nashcore/errors.h"
#include "nashcore/random.h"

namespace nashcore {

enum class ConstraintKind { kCardinality, kExplicit, kPartition, kMatroidOracle, kPacking, kCovering };

inline const char* ConstraintKindName(ConstraintKind kind) {
  switch (kind) {
    case ConstraintKind::kCardinality: return "cardinality";
    case ConstraintKind::kExplicit: return "explicit";
    case ConstraintKind::kPartition: return "partition";
    case ConstraintKind::kMatroidOracle: return "matroid_oracle";
    case ConstraintKind::kPacking: return "packing";
    case ConstraintKind::kCovering: return "covering";
  }
  return "unknown";
}

// A (candidate set, bound) pair: a cap for packing rows, a floor for
// covering rows.
struct ConstraintRow {
  Committee set;
  long bound = 0;
};

// Default number of subsets a brute-force search over the family may visit.
inline constexpr std::uint64_t kDefaultSubsetCap = std::uint64_t{1} << 22;

// The family P of feasible committees over candidates {0..m-1}. Every member
// has size at most k.
class FeasibilityFamily {
 public:
  using Oracle = std::function<bool(const Committee&)>;

  static FeasibilityFamily Cardinality(int m, int k) {
    FeasibilityFamily f(ConstraintKind::kCardinality, m, k);
    f.downward_closed_ = true;
    f.matroid_ = true;
    return f;
  }

  static FeasibilityFamily Explicit(int m, int k, std::vector<Committee> sets) {
    FeasibilityFamily f(ConstraintKind::kExplicit, m, k);
    for (auto& s : sets) {
      s = Normalized(std::move(s));
      f.CheckIndices(s);
      f.explicit_.insert(s);
    }
    f.downward_closed_ = true;
    for (const auto& s : f.explicit_) {
      if (s.size() > static_cast<size_t>(k)) continue;
      for (int x : s) {
        if (!f.explicit_.count(Without(s, x))) {
          f.downward_closed_ = false;
          break;
        }
      }
      if (!f.downward_closed_) break;
    }
    if (f.downward_closed_ && !f.explicit_.empty() && !f.explicit_.count(Committee{})) {
      f.downward_closed_ = false;
    }
    f.matroid_ = f.downward_closed_ && !f.explicit_.empty() && f.ExplicitExchangeHolds();
    return f;
  }

  // Disjoint groups with per-group caps; ungrouped candidates are free.
  static FeasibilityFamily Partition(int m, int k, std::vector<Committee> groups, std::vector<long> caps) {
    if (groups.size() != caps.size()) throw ParameterError("partition needs one cap per group");
    FeasibilityFamily f(ConstraintKind::kPartition, m, k);
    f.group_of_.assign(m, -1);
    for (size_t g = 0; g < groups.size(); ++g) {
      if (caps[g] < 0) throw ParameterError("negative partition cap");
      groups[g] = Normalized(std::move(groups[g]));
      f.CheckIndices(groups[g]);
      for (int x : groups[g]) {
        if (f.group_of_[x] != -1) throw ParameterError("partition groups overlap");
        f.group_of_[x] = static_cast<int>(g);
      }
      f.rows_.push_back({groups[g], caps[g]});
    }
    f.downward_closed_ = true;
    f.matroid_ = true;
    return f;
  }

  // An independence predicate. Trusted as a matroid only after the axioms
  // are verified, which happens here whenever m <= 10.
  static FeasibilityFamily MatroidOracle(int m, int k, Oracle independent) {
    FeasibilityFamily f(ConstraintKind::kMatroidOracle, m, k);
    f.oracle_ = std::make_shared<Oracle>(std::move(independent));
    f.downward_closed_ = true;
    f.matroid_ = true;
    if (m <= 10) {
      std::string why;
      if (!f.VerifyMatroidAxioms(&why)) throw MatroidAxiomViolation(why);
      f.oracle_verified_ = true;
    }
    return f;
  }

  static FeasibilityFamily Packing(int m, int k, std::vector<ConstraintRow> rows) {
    FeasibilityFamily f(ConstraintKind::kPacking, m, k);
    std::vector<int> seen(m, 0);
    bool disjoint = true;
    for (auto& row : rows) {
      if (row.bound < 0) throw ParameterError("negative packing cap");
      row.set = Normalized(std::move(row.set));
      f.CheckIndices(row.set);
      for (int x : row.set) {
        if (seen[x]++) disjoint = false;
      }
    }
    f.rows_ = std::move(rows);
    f.downward_closed_ = true;
    f.matroid_ = disjoint;
    return f;
  }

  static FeasibilityFamily Covering(int m, int k, std::vector<ConstraintRow> rows) {
    FeasibilityFamily f(ConstraintKind::kCovering, m, k);
    for (auto& row : rows) {
      if (row.bound < 0) throw ParameterError("negative covering floor");
      row.set = Normalized(std::move(row.set));
      f.CheckIndices(row.set);
    }
    f.rows_ = std::move(rows);
    f.downward_closed_ = f.rows_.empty() ||
                         std::all_of(f.rows_.begin(), f.rows_.end(),
                                     [](const ConstraintRow& r) { return r.bound == 0; });
    f.matroid_ = f.downward_closed_;
    return f;
  }

  ConstraintKind kind() const { return kind_; }
  int m() const { return m_; }
  int k() const { return k_; }
  bool IsDownwardClosed() const { return downward_closed_; }
  bool IsMatroid() const { return matroid_; }
  bool oracle_verified() const { return oracle_verified_; }
  const std::vector<ConstraintRow>& rows() const { return rows_; }
  const std::set<Committee>& explicit_sets() const { return explicit_; }

  // Copy with a different global size bound.
  FeasibilityFamily WithK(int k) const {
    FeasibilityFamily f = *this;
    f.k_ = k;
    if (kind_ == ConstraintKind::kExplicit) f.matroid_ = f.downward_closed_ && f.ExplicitExchangeHolds();
    return f;
  }

  bool IsFeasible(const Committee& t) const {
    if (static_cast<int>(t.size()) > k_) return false;
    switch (kind_) {
      case ConstraintKind::kCardinality:
        return true;
      case ConstraintKind::kExplicit:
        return explicit_.count(t) > 0;
      case ConstraintKind::kPartition: {
        std::vector<long> used(rows_.size(), 0);
        for (int x : t) {
          int g = group_of_[x];
          if (g >= 0 && ++used[g] > rows_[g].bound) return false;
        }
        return true;
      }
      case ConstraintKind::kMatroidOracle:
        return (*oracle_)(t);
      case ConstraintKind::kPacking:
        for (const auto& row : rows_) {
          if (static_cast<long>(Intersection(t, row.set).size()) > row.bound) return false;
        }
        return true;
      case ConstraintKind::kCovering:
        for (const auto& row : rows_) {
          if (static_cast<long>(Intersection(t, row.set).size()) < row.bound) return false;
        }
        return true;
    }
    return false;
  }

  // Exhaustive downward-closure and exchange check (m <= 10).
  bool VerifyMatroidAxioms(std::string* why = nullptr) const {
    if (m_ > 10) throw EnumerationLimitError("matroid axiom verification needs m <= 10");
    std::size_t total = std::size_t{1} << m_;
    std::vector<char> indep(total);
    for (std::size_t s = 0; s < total; ++s) indep[s] = IsFeasible(FromMask(s));
    auto fail = [&](const std::string& msg) {
      if (why) *why = msg;
      return false;
    };
    if (!indep[0]) return fail("empty set is not independent");
    for (std::size_t s = 1; s < total; ++s) {
      if (!indep[s]) continue;
      for (int x = 0; x < m_; ++x) {
        if ((s >> x & 1) && !indep[s & ~(std::size_t{1} << x)]) {
          return fail("not downward closed at " + FormatCommittee(FromMask(s)));
        }
      }
    }
    for (std::size_t a = 0; a < total; ++a) {
      if (!indep[a]) continue;
      for (std::size_t b = 0; b < total; ++b) {
        if (!indep[b] || std::popcount(b) <= std::popcount(a)) continue;
        bool ok = false;
        for (std::size_t rest = b & ~a; rest && !ok; rest &= rest - 1) {
          ok = indep[a | (std::size_t{1} << std::countr_zero(rest))];
        }
        if (!ok) {
          return fail("exchange fails for A=" + FormatCommittee(FromMask(a)) +
                      " B=" + FormatCommittee(FromMask(b)));
        }
      }
    }
    return true;
  }

  // Visits feasible sets ordered by size then lexicographically. Throws
  // EnumerationLimitError before visiting more than `cap` candidate subsets.
  void ForEachFeasible(const std::function<bool(const Committee&)>& visit,
                       std::uint64_t cap = kDefaultSubsetCap) const {
    if (kind_ == ConstraintKind::kExplicit) {
      std::vector<Committee> members(explicit_.begin(), explicit_.end());
      std::stable_sort(members.begin(), members.end(),
                       [](const Committee& x, const Committee& y) { return x.size() < y.size(); });
      for (const auto& s : members) {
        if (static_cast<int>(s.size()) <= k_ && !visit(s)) return;
      }
      return;
    }
    if (BinomialCount(m_, k_) > static_cast<double>(cap)) {
      throw EnumerationLimitError("enumerating subsets of size <= " + std::to_string(k_) + " of " +
                                  std::to_string(m_) + " candidates exceeds the cap of " +
                                  std::to_string(cap));
    }
    ForEachSubsetBySize(m_, k_, [&](const Committee& t) {
      if (!IsFeasible(t)) return true;
      return visit(t);
    });
  }

  std::vector<Committee> AllFeasible(std::uint64_t cap = kDefaultSubsetCap) const {
    std::vector<Committee> out;
    ForEachFeasible([&](const Committee& t) {
      out.push_back(t);
      return true;
    }, cap);
    return out;
  }

 private:
  FeasibilityFamily(ConstraintKind kind, int m, int k) : kind_(kind), m_(m), k_(k) {
    if (m < 1) throw ParameterError("family over an empty candidate set");
    if (k < 0) throw ParameterError("negative committee size");
  }

  void CheckIndices(const Committee& c) const {
    for (int x : c) {
      if (x < 0 || x >= m_) throw ParameterError("candidate index out of range in constraint");
    }
  }

  bool ExplicitExchangeHolds() const {
    if (explicit_.size() > 4096) return false;
    std::vector<Committee> members;
    for (const auto& s : explicit_) {
      if (static_cast<int>(s.size()) <= k_) members.push_back(s);
    }
    for (const auto& a : members) {
      for (const auto& b : members) {
        if (b.size() <= a.size()) continue;
        bool ok = false;
        for (int x : Difference(b, a)) {
          if (explicit_.count(With(a, x))) {
            ok = true;
            break;
          }
        }
        if (!ok) return false;
      }
    }
    return true;
  }

  ConstraintKind kind_;
  int m_;
  int k_;
  bool downward_closed_ = false;
  bool matroid_ = false;
  bool oracle_verified_ = false;
  std::set<Committee> explicit_;
  std::vector<int> group_of_;
  std::vector<ConstraintRow> rows_;
  std::shared_ptr<Oracle> oracle_;
};

// Lexicographically least W'' (smallest size first) with |W''| <= q and
// W'' ∪ partial ∈ P, or nullopt when none exists.
inline std::optional<Committee> QCompletion(const FeasibilityFamily& family, const Committee& partial,
                                            int q, std::uint64_t cap = kDefaultSubsetCap) {
  if (q < 0) return std::nullopt;
  if (family.IsDownwardClosed()) {
    if (family.IsFeasible(partial)) return Committee{};
    return std::nullopt;
  }
  if (family.kind() == ConstraintKind::kExplicit) {
    std::optional<Committee> best;
    for (const auto& s : family.explicit_sets()) {
      if (static_cast<int>(s.size()) > family.k() || !IsSubset(partial, s)) continue;
      Committee extra = Difference(s, partial);
      if (static_cast<int>(extra.size()) > q) continue;
      if (!best || extra.size() < best->size() || (extra.size() == best->size() && extra < *best)) {
        best = extra;
      }
    }
    return best;
  }
  Committee pool = Difference(Range(family.m()), partial);
  int limit = std::min<int>(q, family.k() - static_cast<int>(partial.size()));
  if (limit < 0) return std::nullopt;
  if (BinomialCount(static_cast<int>(pool.size()), limit) > static_cast<double>(cap)) {
    throw EnumerationLimitError("q-completion search exceeds the subset cap");
  }
  std::optional<Committee> found;
  ForEachSubsetBySize(static_cast<int>(pool.size()), limit, [&](const Committee& local) {
    Committee extra;
    for (int i : local) extra.push_back(pool[i]);
    if (family.IsFeasible(Union(partial, extra))) {
      found = extra;
      return false;
    }
    return true;
  });
  return found;
}

inline bool IsQCompletable(const FeasibilityFamily& family, const Committee& partial, int q) {
  return QCompletion(family, partial, q).has_value();
}

inline bool IsBasis(const FeasibilityFamily& family, const Committee& w) {
  if (!family.IsFeasible(w)) return false;
  for (int x = 0; x < family.m(); ++x) {
    if (!Contains(w, x) && family.IsFeasible(With(w, x))) return false;
  }
  return true;
}

// Greedily adds pool candidates in id order while independent.
inline Committee ExtendToBasis(const FeasibilityFamily& family, Committee t, Committee pool) {
  if (!family.IsMatroid()) throw UnsupportedConstraintError("ExtendToBasis needs a matroid family");
  t = Normalized(std::move(t));
  if (!family.IsFeasible(t)) throw CannotCompleteError("starting set " + FormatCommittee(t) + " is not independent");
  for (int x : Normalized(std::move(pool))) {
    if (Contains(t, x)) continue;
    Committee next = With(t, x);
    if (family.IsFeasible(next)) t = std::move(next);
  }
  if (!IsBasis(family, t)) throw CannotCompleteError("pool cannot extend " + FormatCommittee(t) + " to a basis");
  return t;
}

inline Committee GreedyBasis(const FeasibilityFamily& family) {
  return ExtendToBasis(family, {}, Range(family.m()));
}

// Basis built greedily over a uniformly shuffled candidate order.
inline Committee RandomBasis(const FeasibilityFamily& family, Rng& rng) {
  if (!family.IsMatroid()) throw UnsupportedConstraintError("RandomBasis needs a matroid family");
  Committee order = Range(family.m());
  rng.Shuffle(order);
  Committee t;
  for (int x : order) {
    Committee next = With(t, x);
    if (family.IsFeasible(next)) t = std::move(next);
  }
  return t;
}

// f : W1 \ W2 -> W2 \ W1 with W1 - e + f(e) independent for every e, found
// as a perfect matching on the valid single swaps. Returned sorted by e.
inline std::vector<std::pair<int, int>> BasisExchangeBijection(const FeasibilityFamily& family,
                                                               const Committee& w1_in,
                                                               const Committee& w2_in) {
  Committee w1 = Normalized(w1_in);
  Committee w2 = Normalized(w2_in);
  if (!IsBasis(family, w1)) throw NotABasisError(FormatCommittee(w1) + " is not a basis");
  if (!IsBasis(family, w2)) throw NotABasisError(FormatCommittee(w2) + " is not a basis");
  Committee left = Difference(w1, w2);
  Committee right = Difference(w2, w1);
  if (left.size() != right.size()) throw MatroidAxiomViolation("bases of different sizes");
  size_t n = left.size();
  std::vector<std::vector<int>> adj(n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      if (family.IsFeasible(Swap(w1, left[i], right[j]))) adj[i].push_back(static_cast<int>(j));
    }
  }
  std::vector<int> match_right(n, -1);
  std::function<bool(int, std::vector<char>&)> augment = [&](int i, std::vector<char>& seen) {
    for (int j : adj[i]) {
      if (match_right[j] < 0) {
        match_right[j] = i;
        return true;
      }
    }
    for (int j : adj[i]) {
      if (seen[j]) continue;
      seen[j] = 1;
      if (match_right[j] < 0 || augment(match_right[j], seen)) {
        match_right[j] = i;
        return true;
      }
    }
    return false;
  };
  for (size_t i = 0; i < n; ++i) {
    std::vector<char> seen(n, 0);
    if (!augment(static_cast<int>(i), seen)) {
      throw MatroidAxiomViolation("no exchange bijection between " + FormatCommittee(w1) + " and " +
                                  FormatCommittee(w2));
    }
  }
  std::vector<std::pair<int, int>> out(n);
  for (size_t j = 0; j < n; ++j) out[match_right[j]] = {left[match_right[j]], right[j]};
  return out;
}

}  // namespace nashcore

#endif  // NASHCORE_FEASIBILITY_H_
