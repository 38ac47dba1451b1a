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

#include "triples/bigint.hpp"
#include "triples/real.hpp"

namespace triples {

// Complex ball: the true value lies within distance err() of (re, im).
// Midpoints carry `precision()` bits and are rounded to nearest; the radius is
// a 64-bit float that is only ever rounded upward.
class TrackedComplex {
 public:
  static constexpr mpfr_prec_t kRadiusPrecision = 64;

  explicit TrackedComplex(mpfr_prec_t prec = Real::kDefaultPrecision)
      : re_(prec), im_(prec), err_(kRadiusPrecision) {}

  TrackedComplex(Real re, Real im, Real err)
      : re_(std::move(re)), im_(std::move(im)), err_(kRadiusPrecision) {
    mpfr_set(err_.raw(), err.raw(), MPFR_RNDU);
    if (im_.precision() != re_.precision()) mpfr_prec_round(im_.raw(), re_.precision(), MPFR_RNDN);
  }

  static TrackedComplex from_rational(const BigRational& re, const BigRational& im,
                                      mpfr_prec_t prec) {
    TrackedComplex z(prec);
    int tr = mpfr_set_q(z.re_.raw(), re.get_mpq_t(), MPFR_RNDN);
    int ti = mpfr_set_q(z.im_.raw(), im.get_mpq_t(), MPFR_RNDN);
    if (tr != 0 || ti != 0) z.add_rounding_error(1);
    return z;
  }
  static TrackedComplex from_integer(const BigInt& x, mpfr_prec_t prec) {
    TrackedComplex z(prec);
    if (mpfr_set_z(z.re_.raw(), x.get_mpz_t(), MPFR_RNDN) != 0) z.add_rounding_error(1);
    return z;
  }

  // e^{2 pi i j / d}
  static TrackedComplex root_of_unity(long j, unsigned long d, mpfr_prec_t prec) {
    TrackedComplex z(prec);
    long jj = j % static_cast<long>(d);
    if (jj < 0) jj += static_cast<long>(d);
    const unsigned long u = static_cast<unsigned long>(jj);
    if (u == 0) {
      mpfr_set_ui(z.re_.raw(), 1, MPFR_RNDN);
    } else if (2 * u == d) {
      mpfr_set_si(z.re_.raw(), -1, MPFR_RNDN);
    } else if (4 * u == d) {
      mpfr_set_ui(z.im_.raw(), 1, MPFR_RNDN);
    } else if (4 * u == 3 * d) {
      mpfr_set_si(z.im_.raw(), -1, MPFR_RNDN);
    } else {
      // Angle carries 64 guard bits, so its error is far below the final
      // rounding of cos/sin.
      Real angle = Real::pi(prec + 64);
      mpfr_mul_ui(angle.raw(), angle.raw(), 2 * u, MPFR_RNDN);
      mpfr_div_ui(angle.raw(), angle.raw(), d, MPFR_RNDN);
      mpfr_cos(z.re_.raw(), angle.raw(), MPFR_RNDN);
      mpfr_sin(z.im_.raw(), angle.raw(), MPFR_RNDN);
      z.add_rounding_error(2);
    }
    return z;
  }

  mpfr_prec_t precision() const { return re_.precision(); }
  const Real& re() const { return re_; }
  const Real& im() const { return im_; }
  const Real& err() const { return err_; }

  // |re| + |im| + err, rounded up: an upper bound for the modulus of any
  // point in the ball.
  Real magnitude_upper() const {
    Real r = l1_mid();
    mpfr_add(r.raw(), r.raw(), err_.raw(), MPFR_RNDU);
    return r;
  }

  // Relative radius err / |mid| (inf when the midpoint is zero).
  double relative_error() const {
    Real m(kRadiusPrecision);
    mpfr_hypot(m.raw(), re_.raw(), im_.raw(), MPFR_RNDD);
    if (m.is_zero()) return err_.is_zero() ? 0.0 : std::numeric_limits<double>::infinity();
    Real q(kRadiusPrecision);
    mpfr_div(q.raw(), err_.raw(), m.raw(), MPFR_RNDU);
    return q.to_double();
  }

  // Exact membership test for a rational point.
  bool contains(const BigRational& re, const BigRational& im) const {
    if (!re_.is_finite() || !im_.is_finite() || !err_.is_finite()) return false;
    BigRational dr = re - re_.to_rational();
    BigRational di = im - im_.to_rational();
    BigRational e = err_.to_rational();
    return dr * dr + di * di <= e * e;
  }

  TrackedComplex conj() const {
    TrackedComplex z(*this);
    mpfr_neg(z.im_.raw(), z.im_.raw(), MPFR_RNDN);
    return z;
  }

  TrackedComplex operator-() const {
    TrackedComplex z(*this);
    mpfr_neg(z.re_.raw(), z.re_.raw(), MPFR_RNDN);
    mpfr_neg(z.im_.raw(), z.im_.raw(), MPFR_RNDN);
    return z;
  }

  TrackedComplex& operator+=(const TrackedComplex& o) { return add_signed(o, false); }
  TrackedComplex& operator-=(const TrackedComplex& o) { return add_signed(o, true); }
  friend TrackedComplex operator+(TrackedComplex a, const TrackedComplex& b) { return a += b; }
  friend TrackedComplex operator-(TrackedComplex a, const TrackedComplex& b) { return a -= b; }

  friend TrackedComplex operator*(const TrackedComplex& a, const TrackedComplex& b) {
    const mpfr_prec_t prec = std::max(a.precision(), b.precision());
    TrackedComplex z(prec);
    Real t(prec);
    if (&a == &b) {
      // (x+iy)^2 = (x+y)(x-y) + 2ixy
      Real s(prec), d(prec);
      mpfr_add(s.raw(), a.re_.raw(), a.im_.raw(), MPFR_RNDN);
      mpfr_sub(d.raw(), a.re_.raw(), a.im_.raw(), MPFR_RNDN);
      mpfr_mul(z.re_.raw(), s.raw(), d.raw(), MPFR_RNDN);
      mpfr_mul(z.im_.raw(), a.re_.raw(), a.im_.raw(), MPFR_RNDN);
      mpfr_mul_2ui(z.im_.raw(), z.im_.raw(), 1, MPFR_RNDN);
    } else {
      mpfr_mul(z.re_.raw(), a.re_.raw(), b.re_.raw(), MPFR_RNDN);
      mpfr_mul(t.raw(), a.im_.raw(), b.im_.raw(), MPFR_RNDN);
      mpfr_sub(z.re_.raw(), z.re_.raw(), t.raw(), MPFR_RNDN);
      mpfr_mul(z.im_.raw(), a.re_.raw(), b.im_.raw(), MPFR_RNDN);
      mpfr_mul(t.raw(), a.im_.raw(), b.re_.raw(), MPFR_RNDN);
      mpfr_add(z.im_.raw(), z.im_.raw(), t.raw(), MPFR_RNDN);
    }
    // err = A eb + B ea + ea eb + 2^{3-P} A B with A, B the L1 midpoint norms.
    Real A = a.l1_mid(), B = b.l1_mid();
    Real e(kRadiusPrecision), w(kRadiusPrecision);
    mpfr_mul(e.raw(), A.raw(), b.err_.raw(), MPFR_RNDU);
    mpfr_mul(w.raw(), B.raw(), a.err_.raw(), MPFR_RNDU);
    mpfr_add(e.raw(), e.raw(), w.raw(), MPFR_RNDU);
    mpfr_mul(w.raw(), a.err_.raw(), b.err_.raw(), MPFR_RNDU);
    mpfr_add(e.raw(), e.raw(), w.raw(), MPFR_RNDU);
    mpfr_mul(w.raw(), A.raw(), B.raw(), MPFR_RNDU);
    mpfr_mul_2si(w.raw(), w.raw(), 3 - static_cast<long>(prec), MPFR_RNDU);
    mpfr_add(z.err_.raw(), e.raw(), w.raw(), MPFR_RNDU);
    return z;
  }
  TrackedComplex& operator*=(const TrackedComplex& o) { return *this = *this * o; }

  // Multiplication by an exact integer.
  TrackedComplex& operator*=(const BigInt& k) {
    Real A = l1_mid();
    Real kk(kRadiusPrecision);
    mpfr_set_z(kk.raw(), k.get_mpz_t(), MPFR_RNDU);
    mpfr_abs(kk.raw(), kk.raw(), MPFR_RNDU);
    mpfr_mul_z(re_.raw(), re_.raw(), k.get_mpz_t(), MPFR_RNDN);
    mpfr_mul_z(im_.raw(), im_.raw(), k.get_mpz_t(), MPFR_RNDN);
    Real w(kRadiusPrecision);
    mpfr_mul(err_.raw(), err_.raw(), kk.raw(), MPFR_RNDU);
    mpfr_mul(w.raw(), A.raw(), kk.raw(), MPFR_RNDU);
    mpfr_mul_2si(w.raw(), w.raw(), 1 - static_cast<long>(precision()), MPFR_RNDU);
    mpfr_add(err_.raw(), err_.raw(), w.raw(), MPFR_RNDU);
    return *this;
  }

  // Division by an exact nonzero integer.
  TrackedComplex& operator/=(const BigInt& k) {
    if (k == 0) throw UsageError("TrackedComplex: division by zero");
    mpfr_div_z(re_.raw(), re_.raw(), k.get_mpz_t(), MPFR_RNDN);
    mpfr_div_z(im_.raw(), im_.raw(), k.get_mpz_t(), MPFR_RNDN);
    Real kk(kRadiusPrecision);
    mpfr_set_z(kk.raw(), k.get_mpz_t(), MPFR_RNDD);
    mpfr_abs(kk.raw(), kk.raw(), MPFR_RNDD);
    mpfr_div(err_.raw(), err_.raw(), kk.raw(), MPFR_RNDU);
    add_rounding_error(1);
    return *this;
  }

  // Rounds the midpoint to `prec` bits, widening the radius accordingly.
  TrackedComplex rounded(mpfr_prec_t prec) const {
    TrackedComplex z(prec);
    int tr = mpfr_set(z.re_.raw(), re_.raw(), MPFR_RNDN);
    int ti = mpfr_set(z.im_.raw(), im_.raw(), MPFR_RNDN);
    mpfr_set(z.err_.raw(), err_.raw(), MPFR_RNDU);
    if (tr != 0 || ti != 0) z.add_rounding_error(1);
    return z;
  }

  TrackedComplex pow(unsigned long e) const {
    TrackedComplex result = from_integer(1, precision());
    TrackedComplex base(*this);
    while (e > 0) {
      if (e & 1) result = result * base;
      e >>= 1;
      if (e > 0) base = base * base;
    }
    return result;
  }

 private:
  Real l1_mid() const {
    Real r(kRadiusPrecision), t(kRadiusPrecision);
    mpfr_abs(r.raw(), re_.raw(), MPFR_RNDU);
    mpfr_abs(t.raw(), im_.raw(), MPFR_RNDU);
    mpfr_add(r.raw(), r.raw(), t.raw(), MPFR_RNDU);
    return r;
  }

  // err += ulps * 2^{-P} * (|re| + |im|)
  void add_rounding_error(unsigned ulps) {
    Real w = l1_mid();
    mpfr_mul_ui(w.raw(), w.raw(), ulps, MPFR_RNDU);
    mpfr_mul_2si(w.raw(), w.raw(), -static_cast<long>(precision()), MPFR_RNDU);
    mpfr_add(err_.raw(), err_.raw(), w.raw(), MPFR_RNDU);
  }

  TrackedComplex& add_signed(const TrackedComplex& o, bool subtract) {
    if (o.precision() > precision()) {
      mpfr_prec_round(re_.raw(), o.precision(), MPFR_RNDN);
      mpfr_prec_round(im_.raw(), o.precision(), MPFR_RNDN);
    }
    int tr, ti;
    if (subtract) {
      tr = mpfr_sub(re_.raw(), re_.raw(), o.re_.raw(), MPFR_RNDN);
      ti = mpfr_sub(im_.raw(), im_.raw(), o.im_.raw(), MPFR_RNDN);
    } else {
      tr = mpfr_add(re_.raw(), re_.raw(), o.re_.raw(), MPFR_RNDN);
      ti = mpfr_add(im_.raw(), im_.raw(), o.im_.raw(), MPFR_RNDN);
    }
    mpfr_add(err_.raw(), err_.raw(), o.err_.raw(), MPFR_RNDU);
    if (tr != 0 || ti != 0) add_rounding_error(1);
    return *this;
  }

  Real re_, im_;
  Real err_;
};

}  // namespace triples
