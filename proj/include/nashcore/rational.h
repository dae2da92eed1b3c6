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

#ifndef NASHCORE_RATIONAL_H_
#define NASHCORE_RATIONAL_H_

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "nashcore/errors.h"

namespace nashcore {

// Exact rational number in canonical form (GMP keeps it reduced).
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational MakeRational(long num, long den = 1) {
  if (den == 0) throw ParameterError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Parses "7", "-3/4", "2.7182818285" or "1e-3" into an exact rational.
inline Rational ParseRational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.pop_back();
  }
  size_t start = 0;
  while (start < s.size() &&
         std::isspace(static_cast<unsigned char>(s[start]))) {
    ++start;
  }
  s = s.substr(start);
  if (s.empty()) throw FormatError("empty rational literal");
  auto bad = [&]() { return FormatError("malformed rational literal '" + s + "'"); };

  size_t slash = s.find('/');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    Integer p, q;
    if (num.empty() || den.empty() || p.set_str(num, 10) != 0 ||
        q.set_str(den, 10) != 0) {
      throw bad();
    }
    if (q == 0) throw FormatError("zero denominator in '" + s + "'");
    Rational r(p, q);
    r.canonicalize();
    return r;
  }

  // Decimal with optional exponent.
  size_t i = 0;
  bool negative = false;
  if (s[i] == '+' || s[i] == '-') {
    negative = s[i] == '-';
    ++i;
  }
  std::string digits;
  long frac_digits = 0;
  bool seen_point = false;
  bool any_digit = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      any_digit = true;
      if (seen_point) ++frac_digits;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!any_digit) throw bad();
  long exponent = 0;
  if (i < s.size()) {
    if (s[i] != 'e' && s[i] != 'E') throw bad();
    ++i;
    std::string exp_text = s.substr(i);
    if (exp_text.empty()) throw bad();
    size_t pos = 0;
    try {
      exponent = std::stol(exp_text, &pos);
    } catch (...) {
      throw bad();
    }
    if (pos != exp_text.size()) throw bad();
  }
  Integer mantissa(digits, 10);
  if (negative) mantissa = -mantissa;
  long shift = exponent - frac_digits;
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  Rational r = shift < 0 ? Rational(mantissa, scale) : Rational(mantissa * scale);
  r.canonicalize();
  return r;
}

// "p" for integers, "p/q" otherwise.
inline std::string ToString(const Rational& q) { return q.get_str(10); }

inline bool IsInteger(const Rational& q) { return q.get_den() == 1; }

inline Integer Floor(const Rational& q) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f;
}

inline Integer Ceil(const Rational& q) {
  Integer c;
  mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return c;
}

inline Rational Pow(const Rational& base, unsigned long e) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
  r.canonicalize();
  return r;
}

// H(x) = 1 + 1/2 + ... + 1/x with H(0) = 0.
inline Rational Harmonic(unsigned long x) {
  thread_local std::vector<Rational> cache{Rational(0)};
  while (cache.size() <= x) {
    cache.push_back(cache.back() +
                    Rational(1UL, static_cast<unsigned long>(cache.size())));
  }
  return cache[x];
}

}  // namespace nashcore

#endif  // NASHCORE_RATIONAL_H_
