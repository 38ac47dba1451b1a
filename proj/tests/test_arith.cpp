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


#include <gtest/gtest.h>

#include <random>

#include "triples.hpp"

using namespace triples;

TEST(BigInt, Combinatorics) {
  EXPECT_EQ(factorial(10), 3628800);
  EXPECT_EQ(binomial(13, 6), 1716);
  const unsigned parts[] = {2, 2, 3};
  EXPECT_EQ(multinomial(7, parts), 210);
  EXPECT_EQ(power(7, 7), 823543);
  EXPECT_THROW(make_rational(1, 0), UsageError);
  EXPECT_EQ(make_rational(6, 4).get_str(), "3/2");
}

TEST(Cyclotomic, MinimalPolynomialZero) {
  CyclotomicValue v = CyclotomicValue::integer(3, 1) + CyclotomicValue::root(3, 1) + CyclotomicValue::root(3, 2);
  EXPECT_TRUE(v.is_zero());
  EXPECT_TRUE(CyclotomicValue(5).is_zero());
  EXPECT_FALSE((CyclotomicValue::integer(5, 1) + CyclotomicValue::root(5, 1)).is_zero());
}

TEST(Cyclotomic, ProductsAndConjugation) {
  const auto i2 = CyclotomicValue::root(4, 1) * CyclotomicValue::root(4, 1);
  EXPECT_EQ(i2, CyclotomicValue::integer(4, -1));
  EXPECT_EQ(i2.as_integer(), BigInt(-1));
  // 2cos(2pi/7) is real, so conjugation fixes it.
  const auto r = CyclotomicValue::root(7, 1) + CyclotomicValue::root(7, 6);
  EXPECT_EQ(r.conj(), r);
  EXPECT_NE(CyclotomicValue::root(7, 1).conj(), CyclotomicValue::root(7, 1));
  // Mixed orders embed into the lcm.
  const auto mixed = CyclotomicValue::root(2, 1) * CyclotomicValue::root(3, 1);
  EXPECT_EQ(mixed, -CyclotomicValue::root(6, 2).embed(6));
}

TEST(Cyclotomic, JsonRoundTrip) {
  auto v = CyclotomicValue::root(9, 4);
  v *= BigInt(-12);
  EXPECT_EQ(CyclotomicValue::from_json(v.to_json()), v);
}

TEST(Cyclotomic, ToTracked) {
  const auto z = CyclotomicValue::root(3, 1).to_tracked(128);
  EXPECT_NEAR(z.re().to_double(), -0.5, 1e-15);
  EXPECT_NEAR(z.im().to_double(), 0.8660254037844386, 1e-15);
  EXPECT_LT(z.err().to_double(), 1e-36);
  const auto zero = CyclotomicValue(5).to_tracked(128);
  EXPECT_TRUE(zero.contains(0, 0));
  // 3 zeta + 3 zeta^2 = -3
  auto w = CyclotomicValue::root(3, 1) + CyclotomicValue::root(3, 2);
  w *= BigInt(3);
  const auto t = w.to_tracked(128);
  EXPECT_TRUE(t.contains(-3, 0));
  EXPECT_LE(std::abs(t.im().to_double()), t.err().to_double());
}

// Every operation keeps the exact result inside the ball, even at a
// deliberately low precision where rounding dominates.
TEST(TrackedComplex, BallSoundness) {
  std::mt19937_64 rng(20260101);
  std::uniform_int_distribution<long> num(-1'000'000, 1'000'000), den(1, 999'983);
  auto rat = [&] { return make_rational(num(rng), den(rng)); };
  for (int trial = 0; trial < 10000; ++trial) {
    const mpfr_prec_t prec = 20 + trial % 40;
    BigRational ar = rat(), ai = rat(), br = rat(), bi = rat();
    const BigInt k = num(rng) | 1;
    TrackedComplex a = TrackedComplex::from_rational(ar, ai, prec);
    TrackedComplex b = TrackedComplex::from_rational(br, bi, prec);
    TrackedComplex z;
    BigRational zr, zi;
    switch (trial % 5) {
      case 0:
        z = a + b;
        zr = ar + br, zi = ai + bi;
        break;
      case 1:
        z = a - b;
        zr = ar - br, zi = ai - bi;
        break;
      case 2:
        z = a * b;
        zr = ar * br - ai * bi, zi = ar * bi + ai * br;
        break;
      case 3:
        z = a * a;
        zr = ar * ar - ai * ai, zi = 2 * ar * ai;
        break;
      default:
        z = a;
        z *= k;
        z /= BigInt(k * 3 + 1);
        zr = ar * k / BigRational(BigInt(k * 3 + 1)), zi = ai * k / BigRational(BigInt(k * 3 + 1));
        break;
    }
    // Chain a second operation so that input radii are nonzero.
    z = z * b + a;
    const BigRational wr = zr * br - zi * bi + ar, wi = zr * bi + zi * br + ai;
    ASSERT_TRUE(z.contains(wr, wi)) << "trial " << trial;
  }
}

TEST(TrackedComplex, RootsOfUnityAreContained) {
  for (unsigned long d : {1ul, 2ul, 4ul, 8ul}) {
    for (long j = 0; j < static_cast<long>(d); ++j) {
      const auto z = TrackedComplex::root_of_unity(j, d, 64);
      if (d <= 4) {
        const long rr[] = {1, 0, -1, 0}, ii[] = {0, 1, 0, -1};
        const long q = (4 / static_cast<long>(d)) * j;
        EXPECT_TRUE(z.contains(rr[q], ii[q]));
      }
      EXPECT_NEAR(z.magnitude_upper().to_double(), d == 8 && j % 2 ? std::sqrt(2.0) : 1.0, 1e-12);
    }
  }
}

TEST(LogMagnitude, Combinatorial) {
  const unsigned long f5[] = {5};
  EXPECT_NEAR(log_combinatorial(Combinatorial::factorial, f5).ln_abs().to_double(), 4.78749174, 1e-8);
  const unsigned long trivial[] = {9, 9};
  EXPECT_EQ(log_combinatorial(Combinatorial::multinomial, trivial).ln_abs().to_double(), 0.0);
  const unsigned long big[] = {3003, 1001, 1001, 1001};
  const double half = -0.5 * log_combinatorial(Combinatorial::multinomial, big).ln_abs().to_double();
  EXPECT_NEAR(half, -1645.46757758, 1e-6);
}

TEST(LogMagnitude, SignedProducts) {
  LogMagnitude a = LogMagnitude::of(BigInt(-8)), b = LogMagnitude::of(BigInt(3));
  a *= b;
  EXPECT_EQ(a.sign(), -1);
  EXPECT_NEAR(a.ln_abs_double(), std::log(24.0), 1e-14);
  EXPECT_TRUE(LogMagnitude::of(BigInt(0)).is_zero());
}
