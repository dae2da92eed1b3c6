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

#ifndef NASHCORE_RANDOM_H_
#define NASHCORE_RANDOM_H_

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "nashcore/rational.h"

namespace nashcore {

inline constexpr const char* kRngName = "mt19937_64/splitmix64-v1";

inline std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Seeded generator with deterministic child streams. The bounded draws use
// rejection sampling on raw engine output so results do not depend on the
// standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : seed_(seed), engine_(SplitMix64(seed)) {}

  std::uint64_t seed() const { return seed_; }

  // Independent stream for index `stream` (worker, trial block, instance).
  Rng Split(std::uint64_t stream) const {
    return Rng(SplitMix64(seed_ ^ SplitMix64(stream + 0x632BE59BD9B4E019ULL)));
  }

  std::uint64_t Next() { return engine_(); }

  // Uniform in [0, bound).
  std::uint64_t Below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t v;
    do {
      v = engine_();
    } while (v >= limit);
    return v % bound;
  }

  // Uniform integer in [lo, hi].
  long Uniform(long lo, long hi) {
    return lo + static_cast<long>(Below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool Coin() { return engine_() >> 63; }

  // True with probability p for a rational p in [0, 1], decided exactly.
  bool Bernoulli(const Rational& p) {
    if (p <= 0) return false;
    if (p >= 1) return true;
    const Integer& den = p.get_den();
    if (den.fits_ulong_p() && den.get_ui() <= (std::uint64_t{1} << 62)) {
      return Below(den.get_ui()) < p.get_num().get_ui();
    }
    Integer draw;
    Integer limit = 1;
    limit <<= 64;
    // Fall back to a 64-bit fraction compared exactly.
    draw = static_cast<unsigned long>(engine_());
    return Rational(draw, limit) < p;
  }

  // Random rational k/den with k uniform in [0, den].
  Rational UnitRational(long den) { return MakeRational(static_cast<long>(Uniform(0, den)), den); }

  template <typename T>
  void Shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = Below(i);
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace nashcore

#endif  // NASHCORE_RANDOM_H_
