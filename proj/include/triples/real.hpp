// Copyright 2026 The triples Authors
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

#pragma once

#include <mpfr.h>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>

#include "triples/bigint.hpp"

namespace triples {

// Thin RAII wrapper over mpfr_t. Arithmetic operators round to nearest at the
// larger of the operand precisions; directed rounding goes through the
// free functions taking an explicit mpfr_rnd_t.
class Real {
 public:
  static constexpr mpfr_prec_t kDefaultPrecision = 256;

  explicit Real(mpfr_prec_t prec = kDefaultPrecision) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  Real(mpfr_prec_t prec, double x, mpfr_rnd_t rnd = MPFR_RNDN) : Real(prec) {
    mpfr_set_d(v_, x, rnd);
  }
  Real(mpfr_prec_t prec, long x, mpfr_rnd_t rnd = MPFR_RNDN) : Real(prec) {
    mpfr_set_si(v_, x, rnd);
  }
  Real(mpfr_prec_t prec, int x, mpfr_rnd_t rnd = MPFR_RNDN) : Real(prec, long{x}, rnd) {}
  Real(mpfr_prec_t prec, const BigInt& x, mpfr_rnd_t rnd = MPFR_RNDN) : Real(prec) {
    mpfr_set_z(v_, x.get_mpz_t(), rnd);
  }
  Real(mpfr_prec_t prec, const BigRational& x, mpfr_rnd_t rnd = MPFR_RNDN) : Real(prec) {
    mpfr_set_q(v_, x.get_mpq_t(), rnd);
  }
  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    // mpfr has no move; swap into a minimal fresh value.
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  bool is_inf() const { return mpfr_inf_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  // Exact conversion of a finite value.
  BigRational to_rational() const {
    BigRational q;
    mpfr_get_q(q.get_mpq_t(), v_);
    return q;
  }

  // Decimal with the given number of significant digits ("-inf", "inf", "nan"
  // for the special values).
  std::string to_string(int digits = 20) const {
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return mpfr_sgn(v_) < 0 ? "-inf" : "inf";
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rg", digits, v_);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
  }

  static Real infinity(int sign, mpfr_prec_t prec = kDefaultPrecision) {
    Real r(prec);
    mpfr_set_inf(r.v_, sign);
    return r;
  }
  static Real pi(mpfr_prec_t prec) {
    Real r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }

  Real operator-() const {
    Real r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }
  Real& operator+=(const Real& o) {
    widen(o);
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator-=(const Real& o) {
    widen(o);
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator*=(const Real& o) {
    widen(o);
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator/=(const Real& o) {
    widen(o);
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_); }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_); }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_); }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_); }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_); }

 private:
  void widen(const Real& o) {
    if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
  }

  mpfr_t v_;
};

inline Real log(const Real& x) {
  Real r(x.precision());
  mpfr_log(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}
inline Real exp(const Real& x) {
  Real r(x.precision());
  mpfr_exp(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}
inline Real sqrt(const Real& x) {
  Real r(x.precision());
  mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}
inline Real abs(const Real& x) {
  Real r(x.precision());
  mpfr_abs(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

// ln|x| for an exact integer, correct to about 2^-prec relative.
inline Real log_abs(const BigInt& x, mpfr_prec_t prec = Real::kDefaultPrecision) {
  if (x == 0) return Real::infinity(-1, prec);
  Real v(prec + 16, abs(x));
  Real r = log(v);
  mpfr_prec_round(r.raw(), prec, MPFR_RNDN);
  return r;
}

inline Real log_abs(const BigRational& x, mpfr_prec_t prec = Real::kDefaultPrecision) {
  if (x == 0) return Real::infinity(-1, prec);
  Real r = log_abs(BigInt(x.get_num()), prec + 8);
  r -= log_abs(BigInt(x.get_den()), prec + 8);
  mpfr_prec_round(r.raw(), prec, MPFR_RNDN);
  return r;
}

}  // namespace triples
