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

#ifndef NASHCORE_SURD_H_
#define NASHCORE_SURD_H_

#include <mpfr.h>

#include <compare>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "nashcore/errors.h"
#include "nashcore/rational.h"

namespace nashcore {

// An element a + b*sqrt(d) of a real quadratic field, with d squarefree.
//
// Rationals are the special case b == 0, stored with d == 0. Arithmetic
// between two irrational values requires a shared radicand. Every utility
// value, score and threshold in the library is a Surd, so the lb00 family
// with odd beta stays exact.
class Surd {
 public:
  Surd() : a_(0), b_(0), d_(0) {}
  Surd(long v) : a_(v), b_(0), d_(0) {}  // NOLINT(runtime/explicit)
  Surd(const Rational& q) : a_(q), b_(0), d_(0) {}  // NOLINT
  Surd(Rational a, Rational b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
    if (d_ < 0) throw ParameterError("negative radicand");
    Normalize();
  }

  // sqrt(q) for a nonnegative rational q.
  static Surd Sqrt(const Rational& q) {
    if (q < 0) throw ParameterError("sqrt of negative rational");
    if (q == 0) return Surd();
    // sqrt(p/s) = sqrt(p*s)/s.
    Integer n = q.get_num() * q.get_den();
    Integer square_part = 1;
    Integer rest = n;
    for (Integer f = 2; f * f <= rest; ++f) {
      while (rest % (f * f) == 0) {
        rest /= f * f;
        square_part *= f;
      }
    }
    Rational coeff(square_part, q.get_den());
    coeff.canonicalize();
    if (rest == 1) return Surd(coeff);
    if (!rest.fits_slong_p()) throw ParameterError("radicand too large");
    return Surd(Rational(0), coeff, rest.get_si());
  }

  const Rational& rational_part() const { return a_; }
  const Rational& surd_part() const { return b_; }
  long radicand() const { return d_; }
  bool IsRational() const { return d_ == 0; }

  const Rational& ToRational() const {
    if (!IsRational()) throw ParameterError("value " + ToString() + " is irrational");
    return a_;
  }

  bool IsInteger() const { return IsRational() && a_.get_den() == 1; }

  int Sign() const {
    int sa = sgn(a_);
    int sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    Rational lhs = a_ * a_;
    Rational rhs = b_ * b_ * d_;
    int c = cmp(lhs, rhs);
    if (c > 0) return sa;
    if (c < 0) return sb;
    return 0;
  }

  Surd operator-() const {
    Surd r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
  }

  Surd& operator+=(const Surd& o) {
    long d = CommonRadicand(*this, o);
    a_ += o.a_;
    b_ += o.b_;
    d_ = d;
    Normalize();
    return *this;
  }
  Surd& operator-=(const Surd& o) { return *this += -o; }

  Surd& operator*=(const Surd& o) {
    long d = CommonRadicand(*this, o);
    Rational a = a_ * o.a_ + b_ * o.b_ * d;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    d_ = d;
    Normalize();
    return *this;
  }

  Surd Inverse() const {
    if (IsRational()) {
      if (a_ == 0) throw ParameterError("division by zero");
      return Surd(Rational(1) / a_);
    }
    Rational norm = a_ * a_ - b_ * b_ * d_;
    if (norm == 0) throw ParameterError("division by zero");
    return Surd(a_ / norm, -b_ / norm, d_);
  }

  Surd& operator/=(const Surd& o) {
    if (o.IsRational()) {
      if (o.a_ == 0) throw ParameterError("division by zero");
      a_ /= o.a_;
      b_ /= o.a_;
      Normalize();
      return *this;
    }
    return *this *= o.Inverse();
  }

  friend Surd operator+(Surd x, const Surd& y) { return x += y; }
  friend Surd operator-(Surd x, const Surd& y) { return x -= y; }
  friend Surd operator*(Surd x, const Surd& y) { return x *= y; }
  friend Surd operator/(Surd x, const Surd& y) { return x /= y; }

  friend bool operator==(const Surd& x, const Surd& y) {
    if (x.IsRational() && y.IsRational()) return x.a_ == y.a_;
    return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend std::strong_ordering operator<=>(const Surd& x, const Surd& y) {
    if (x.IsRational() && y.IsRational()) {
      int c = cmp(x.a_, y.a_);
      return c < 0 ? std::strong_ordering::less
                   : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
    int s = (x - y).Sign();
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  // Writes [lo, hi] enclosing the value into caller-initialised MPFR vars.
  void Enclose(mpfr_t lo, mpfr_t hi) const {
    mpfr_set_q(lo, a_.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi, a_.get_mpq_t(), MPFR_RNDU);
    if (IsRational()) return;
    mpfr_prec_t prec = mpfr_get_prec(lo);
    mpfr_t root_lo, root_hi, b_lo, b_hi, t1, t2;
    mpfr_inits2(prec, root_lo, root_hi, b_lo, b_hi, t1, t2, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_si(root_lo, d_, MPFR_RNDD);
    mpfr_sqrt(root_lo, root_lo, MPFR_RNDD);
    mpfr_set_si(root_hi, d_, MPFR_RNDU);
    mpfr_sqrt(root_hi, root_hi, MPFR_RNDU);
    mpfr_set_q(b_lo, b_.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(b_hi, b_.get_mpq_t(), MPFR_RNDU);
    if (sgn(b_) > 0) {
      mpfr_mul(t1, b_lo, root_lo, MPFR_RNDD);
      mpfr_mul(t2, b_hi, root_hi, MPFR_RNDU);
    } else {
      mpfr_mul(t1, b_lo, root_hi, MPFR_RNDD);
      mpfr_mul(t2, b_hi, root_lo, MPFR_RNDU);
    }
    mpfr_add(lo, lo, t1, MPFR_RNDD);
    mpfr_add(hi, hi, t2, MPFR_RNDU);
    mpfr_clears(root_lo, root_hi, b_lo, b_hi, t1, t2, static_cast<mpfr_ptr>(nullptr));
  }

  double ToDouble() const {
    if (IsRational()) return a_.get_d();
    mpfr_t lo, hi;
    mpfr_inits2(128, lo, hi, static_cast<mpfr_ptr>(nullptr));
    Enclose(lo, hi);
    double v = mpfr_get_d(lo, MPFR_RNDN);
    mpfr_clears(lo, hi, static_cast<mpfr_ptr>(nullptr));
    return v;
  }

  Integer Floor() const {
    if (IsRational()) return nashcore::Floor(a_);
    mpfr_t lo, hi;
    mpfr_inits2(256, lo, hi, static_cast<mpfr_ptr>(nullptr));
    Enclose(lo, hi);
    Integer guess;
    mpfr_get_z(guess.get_mpz_t(), lo, MPFR_RNDD);
    mpfr_clears(lo, hi, static_cast<mpfr_ptr>(nullptr));
    while (Surd(Rational(guess)) > *this) --guess;
    while (Surd(Rational(guess + 1)) <= *this) ++guess;
    return guess;
  }

  Integer Ceil() const {
    Integer f = Floor();
    if (Surd(Rational(f)) == *this) return f;
    return f + 1;
  }

  // "p/q" for rationals, "a+b*sqrt(d)" otherwise.
  std::string ToString() const {
    if (IsRational()) return a_.get_str(10);
    std::string out;
    if (a_ != 0) out = a_.get_str(10);
    if (b_ == 1) {
      out += a_ != 0 ? "+" : "";
    } else if (b_ == -1) {
      out += "-";
    } else {
      std::string b = b_.get_str(10);
      if (a_ != 0 && sgn(b_) > 0) out += "+";
      out += b + "*";
    }
    out += "sqrt(" + std::to_string(d_) + ")";
    return out;
  }

  // Inverse of ToString.
  static Surd Parse(std::string_view text) {
    std::string s(text);
    size_t root = s.find("sqrt(");
    if (root == std::string::npos) return Surd(ParseRational(s));
    if (s.back() != ')') throw FormatError("malformed surd '" + s + "'");
    long d = 0;
    try {
      size_t pos = 0;
      std::string inner = s.substr(root + 5, s.size() - root - 6);
      d = std::stol(inner, &pos);
      if (pos != inner.size()) throw FormatError("");
    } catch (...) {
      throw FormatError("malformed surd radicand in '" + s + "'");
    }
    std::string head = s.substr(0, root);
    Rational a(0), b(1);
    if (!head.empty() && head.back() == '*') {
      head.pop_back();
      // Split "a+b" or "a-b" at the last sign that is not leading.
      size_t split = std::string::npos;
      for (size_t i = head.size(); i-- > 1;) {
        if ((head[i] == '+' || head[i] == '-') && head[i - 1] != 'e' && head[i - 1] != 'E') {
          split = i;
          break;
        }
      }
      if (split == std::string::npos) {
        b = ParseRational(head);
      } else {
        a = ParseRational(head.substr(0, split));
        b = ParseRational(head.substr(split));
      }
    } else if (!head.empty()) {
      char sign = head.back();
      if (sign != '+' && sign != '-') throw FormatError("malformed surd '" + s + "'");
      head.pop_back();
      b = sign == '-' ? -1 : 1;
      if (!head.empty()) a = ParseRational(head);
    }
    return Surd(a, b, d);
  }

 private:
  static long CommonRadicand(const Surd& x, const Surd& y) {
    if (x.d_ == 0) return y.d_;
    if (y.d_ == 0 || y.d_ == x.d_) return x.d_;
    throw ParameterError("mixed radicands sqrt(" + std::to_string(x.d_) + ") and sqrt(" +
                         std::to_string(y.d_) + ")");
  }

  void Normalize() {
    if (b_ == 0 || d_ == 0) {
      b_ = 0;
      d_ = 0;
      return;
    }
    if (d_ == 1) {
      a_ += b_;
      b_ = 0;
      d_ = 0;
    }
  }

  Rational a_;
  Rational b_;
  long d_;
};

inline std::ostream& operator<<(std::ostream& os, const Surd& s) { return os << s.ToString(); }

// Integer power by repeated squaring.
inline Surd Pow(const Surd& base, unsigned long e) {
  Surd result(1);
  Surd b = base;
  while (e > 0) {
    if (e & 1) result *= b;
    e >>= 1;
    if (e > 0) b *= b;
  }
  return result;
}

inline Surd Min(const Surd& x, const Surd& y) { return y < x ? y : x; }
inline Surd Max(const Surd& x, const Surd& y) { return x < y ? y : x; }

}  // namespace nashcore

#endif  // NASHCORE_SURD_H_
