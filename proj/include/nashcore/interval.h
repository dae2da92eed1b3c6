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

#ifndef NASHCORE_INTERVAL_H_
#define NASHCORE_INTERVAL_H_

#include <mpfr.h>

#include <algorithm>
#include <string>

#include "nashcore/errors.h"
#include "nashcore/rational.h"
#include "nashcore/surd.h"

namespace nashcore {

inline constexpr mpfr_prec_t kIntervalPrecision = 128;

// Closed interval [lo, hi] with outward-rounded MPFR endpoints.
class Interval {
 public:
  Interval() { Init(); }
  explicit Interval(long v) {
    Init();
    mpfr_set_si(lo_, v, MPFR_RNDD);
    mpfr_set_si(hi_, v, MPFR_RNDU);
  }
  explicit Interval(const Rational& q) {
    Init();
    mpfr_set_q(lo_, q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_, q.get_mpq_t(), MPFR_RNDU);
  }
  explicit Interval(const Surd& s) {
    Init();
    s.Enclose(lo_, hi_);
  }
  Interval(const Interval& o) {
    Init();
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  Interval& operator=(const Interval& o) {
    if (this != &o) {
      mpfr_set(lo_, o.lo_, MPFR_RNDD);
      mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    return *this;
  }
  ~Interval() { mpfr_clears(lo_, hi_, static_cast<mpfr_ptr>(nullptr)); }

  double lo() const { return mpfr_get_d(lo_, MPFR_RNDD); }
  double hi() const { return mpfr_get_d(hi_, MPFR_RNDU); }
  double mid() const { return 0.5 * (lo() + hi()); }
  mpfr_srcptr lo_ptr() const { return lo_; }
  mpfr_srcptr hi_ptr() const { return hi_; }

  friend Interval operator+(const Interval& x, const Interval& y) {
    Interval r;
    mpfr_add(r.lo_, x.lo_, y.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, x.hi_, y.hi_, MPFR_RNDU);
    return r;
  }
  friend Interval operator-(const Interval& x, const Interval& y) {
    Interval r;
    mpfr_sub(r.lo_, x.lo_, y.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, x.hi_, y.lo_, MPFR_RNDU);
    return r;
  }
  friend Interval operator*(const Interval& x, const Interval& y) {
    Interval r;
    mpfr_t t;
    mpfr_init2(t, kIntervalPrecision);
    bool first = true;
    for (mpfr_srcptr a : {x.lo_ptr(), x.hi_ptr()}) {
      for (mpfr_srcptr b : {y.lo_ptr(), y.hi_ptr()}) {
        mpfr_mul(t, a, b, MPFR_RNDD);
        if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
        mpfr_mul(t, a, b, MPFR_RNDU);
        if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
        first = false;
      }
    }
    mpfr_clear(t);
    return r;
  }
  friend Interval operator/(const Interval& x, const Interval& y) {
    if (mpfr_sgn(y.lo_) <= 0 && mpfr_sgn(y.hi_) >= 0) {
      throw ParameterError("interval division by an interval containing zero");
    }
    Interval inv;
    mpfr_ui_div(inv.lo_, 1, y.hi_, MPFR_RNDD);
    mpfr_ui_div(inv.hi_, 1, y.lo_, MPFR_RNDU);
    return x * inv;
  }

  friend Interval Exp(const Interval& x) {
    Interval r;
    mpfr_exp(r.lo_, x.lo_, MPFR_RNDD);
    mpfr_exp(r.hi_, x.hi_, MPFR_RNDU);
    return r;
  }
  friend Interval Log(const Interval& x) {
    if (mpfr_sgn(x.lo_) <= 0) throw ParameterError("log of a nonpositive interval");
    Interval r;
    mpfr_log(r.lo_, x.lo_, MPFR_RNDD);
    mpfr_log(r.hi_, x.hi_, MPFR_RNDU);
    return r;
  }
  friend Interval Sqrt(const Interval& x) {
    if (mpfr_sgn(x.lo_) < 0) throw ParameterError("sqrt of a negative interval");
    Interval r;
    mpfr_sqrt(r.lo_, x.lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, x.hi_, MPFR_RNDU);
    return r;
  }
  // x^e for x >= 0 and a nonnegative integer e.
  friend Interval PowNonneg(const Interval& x, unsigned long e) {
    if (mpfr_sgn(x.lo_) < 0) throw ParameterError("PowNonneg of a negative interval");
    Interval r;
    mpfr_pow_ui(r.lo_, x.lo_, e, MPFR_RNDD);
    mpfr_pow_ui(r.hi_, x.hi_, e, MPFR_RNDU);
    return r;
  }
  // x^y for x > 0; endpoints from the four corner evaluations.
  friend Interval Pow(const Interval& x, const Interval& y) { return Exp(y * Log(x)); }

  // True only when every point of x is strictly below every point of y.
  friend bool CertainlyLess(const Interval& x, const Interval& y) {
    return mpfr_less_p(x.hi_, y.lo_);
  }
  friend bool CertainlyLessEq(const Interval& x, const Interval& y) {
    return mpfr_lessequal_p(x.hi_, y.lo_);
  }

  bool Contains(double v) const {
    return mpfr_cmp_d(lo_, v) <= 0 && mpfr_cmp_d(hi_, v) >= 0;
  }

  // Exact rational upper endpoint.
  Rational UpperRational() const {
    Rational q;
    mpfr_exp_t exp;
    Integer mant;
    exp = mpfr_get_z_2exp(mant.get_mpz_t(), hi_);
    q = Rational(mant);
    if (exp >= 0) {
      q *= Pow(Rational(2), static_cast<unsigned long>(exp));
    } else {
      q /= Pow(Rational(2), static_cast<unsigned long>(-exp));
    }
    return q;
  }

  std::string ToString() const {
    char buf[128];
    mpfr_snprintf(buf, sizeof(buf), "[%.17Rg, %.17Rg]", lo_, hi_);
    return buf;
  }

 private:
  void Init() {
    mpfr_inits2(kIntervalPrecision, lo_, hi_, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
  }

  mpfr_t lo_;
  mpfr_t hi_;
};

inline Interval Exp1() { return Exp(Interval(1)); }

}  // namespace nashcore

#endif  // NASHCORE_INTERVAL_H_
