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

#ifndef NASHCORE_COMMITTEE_H_
#define NASHCORE_COMMITTEE_H_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "nashcore/errors.h"

namespace nashcore {

// A set of candidate indices, kept sorted and duplicate free. The built-in
// vector ordering is the lexicographic tie-break used everywhere.
using Committee = std::vector<int>;
using Mask = std::uint64_t;

inline Committee Normalized(Committee c) {
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  return c;
}

inline bool Contains(const Committee& c, int x) {
  return std::binary_search(c.begin(), c.end(), x);
}

inline bool IsSubset(const Committee& sub, const Committee& super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

inline Committee Union(const Committee& x, const Committee& y) {
  Committee out;
  std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

inline Committee Intersection(const Committee& x, const Committee& y) {
  Committee out;
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

inline Committee Difference(const Committee& x, const Committee& y) {
  Committee out;
  std::set_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

inline Committee With(const Committee& c, int x) {
  Committee out = c;
  out.insert(std::lower_bound(out.begin(), out.end(), x), x);
  return out;
}

inline Committee Without(const Committee& c, int x) {
  Committee out = c;
  auto it = std::lower_bound(out.begin(), out.end(), x);
  if (it != out.end() && *it == x) out.erase(it);
  return out;
}

inline Committee Swap(const Committee& c, int out_id, int in_id) {
  return With(Without(c, out_id), in_id);
}

inline Committee Range(int m) {
  Committee out(m);
  for (int i = 0; i < m; ++i) out[i] = i;
  return out;
}

inline Mask ToMask(const Committee& c) {
  Mask m = 0;
  for (int x : c) {
    if (x < 0 || x >= 64) throw ParameterError("candidate index outside mask range");
    m |= Mask{1} << x;
  }
  return m;
}

inline Committee FromMask(Mask m) {
  Committee out;
  out.reserve(std::popcount(m));
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

// Maps a mask over positions of `universe` to the committee it selects.
inline Committee FromLocalMask(Mask m, const Committee& universe) {
  Committee out;
  out.reserve(std::popcount(m));
  while (m) {
    out.push_back(universe[std::countr_zero(m)]);
    m &= m - 1;
  }
  return out;
}

// Visits every subset of {0..m-1} of size at most `max_size`, ordered by
// size and then lexicographically. Stops early when `visit` returns false.
// Returns false if stopped early.
inline bool ForEachSubsetBySize(int m, int max_size,
                                const std::function<bool(const Committee&)>& visit) {
  max_size = std::min(max_size, m);
  Committee cur;
  for (int s = 0; s <= max_size; ++s) {
    cur.resize(s);
    for (int i = 0; i < s; ++i) cur[i] = i;
    while (true) {
      if (!visit(cur)) return false;
      int i = s - 1;
      while (i >= 0 && cur[i] == m - s + i) --i;
      if (i < 0) break;
      ++cur[i];
      for (int j = i + 1; j < s; ++j) cur[j] = cur[j - 1] + 1;
    }
  }
  return true;
}

inline double BinomialCount(int m, int max_size) {
  double total = 0;
  double c = 1;
  for (int s = 0; s <= std::min(m, max_size); ++s) {
    total += c;
    c = c * (m - s) / (s + 1);
  }
  return total;
}

inline std::string FormatCommittee(const Committee& c) {
  std::string out = "{";
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(c[i]);
  }
  return out + "}";
}

}  // namespace nashcore

#endif  // NASHCORE_COMMITTEE_H_
