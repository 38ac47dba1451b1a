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

#include <cmath>

#include "triples.hpp"

using namespace triples;

TEST(MainTerm, Coefficients) {
  EXPECT_EQ(main_term_coefficient(0), 1);
  EXPECT_EQ(main_term_coefficient(2), make_rational(-1, 2));
  EXPECT_EQ(main_term_coefficient(3), 0);
  EXPECT_EQ(main_term_coefficient(4), make_rational(1, 8));
  EXPECT_EQ(pairing_count(2), 1);
  EXPECT_EQ(pairing_count(4), 3);
  EXPECT_EQ(pairing_count(6), 15);
  EXPECT_THROW(pairing_count(5), UsageError);
  const auto r = main_term(2, 7);
  EXPECT_EQ(r.main_term.sign(), -1);
  EXPECT_NEAR(r.main_term.ln_abs_double(), std::log(0.5) + trivial_cube(7).ln_abs_double(), 1e-12);
  EXPECT_TRUE(main_term(3, 7).main_term.is_zero());
}

TEST(MsparseCubeSum, TwoSparseClosedForm) {
  // (n-1) C(n,2) (-n(n-2)!/n^n)^3 at n = 5.
  const BigRational v = make_rational(-5 * 6, 3125);
  EXPECT_EQ(msparse_cube_sum(2, 5), BigRational(4 * 10) * v * v * v);
  for (unsigned long n = 5; n <= 31; n += 2)
    EXPECT_EQ(msparse_cube_sum(2, n) / trivial_cube_exact(n), make_rational(-BigInt(n), BigInt(2 * (n - 1)))) << n;
  EXPECT_EQ(msparse_cube_sum(1, 9), 0);
}

TEST(MsparseCubeSum, FormulaMatchesBrute) {
  // Partition-formula route at n = 7 against the recursion spectrum.
  const auto spec = spectrum(7);
  for (unsigned m = 0; m <= 4; ++m) {
    BigInt num = 0;
    for (const auto& e : spec)
      if (e.chi.sparsity() == m) num += e.orbit * e.scaled * e.scaled * e.scaled;
    EXPECT_EQ(msparse_cube_sum(m, 7), make_rational(num, power(7, 21))) << m;
  }
}

TEST(MaxParts, Bound) {
  const auto r = max_parts_bound_check(parse_character("n=9;(0^7,2/9,7/9)"));
  EXPECT_TRUE(r.pass);
  EXPECT_NEAR(r.margin, 0.0, 1e-12);  // equality
  const auto dead = max_parts_bound_check(parse_character("n=9;(0^7,2/9,2/9)"));
  EXPECT_TRUE(dead.pass);
  OrbitFilter f;
  f.max_sparsity = 4;
  for (const auto& chi : enumerate_orbits(7, f)) EXPECT_TRUE(max_parts_bound_check(chi).pass) << chi.to_string();
}

TEST(Pairing, TwoSparse) {
  for (unsigned long n = 5; n <= 31; n += 2) {
    const auto chi = standard_pairing(2, n);
    ASSERT_TRUE(uniquely_paired(chi));
    // 1 + E = n/(n-1)
    EXPECT_EQ(pairing_error(chi), make_rational(1, n - 1));
  }
}

TEST(Pairing, ErrorShrinksLikeOneOverN) {
  const auto pins = PinnedConstants::builtin();
  for (unsigned m : {4u, 6u, 8u})
    for (unsigned long n = m + 1; n <= 31; n += 2) {
      if (n % 2 == 0) continue;
      const auto r = pairing_term_check(standard_pairing(m, n), pins);
      EXPECT_TRUE(r.pass) << m << "," << n;
    }
  const auto chi = standard_pairing(4, 11);
  EXPECT_LT(abs(pairing_error(chi)).get_d(), 10.0 / 11);
  EXPECT_THROW(pairing_error(parse_character("n=11;(0^7,1/11,10/11,1/11,10/11)")), UsageError);
  EXPECT_THROW(pairing_error(parse_character("n=11;(0^8,1/11,2/11,8/11)")), UsageError);
}

TEST(OddParity, PinnedConstants) {
  const auto pins = PinnedConstants::builtin();
  for (unsigned long n : {3ul, 5ul, 7ul})
    for (unsigned m = 1; m <= n; m += 2) EXPECT_TRUE(odd_parity_check(m, n, pins).pass) << m << "," << n;
  EXPECT_THROW(odd_parity_check(2, 7, pins), UsageError);
}

TEST(SingularSeries, PartialSums) {
  EXPECT_EQ(singular_series_exact(0), 1);
  EXPECT_EQ(singular_series_exact(1), make_rational(1, 2));
  EXPECT_NEAR(singular_series(12).to_double(), std::exp(-0.5), 1e-9);
}

TEST(Pinned, JsonRoundTripAndDefaultFile) {
  const auto p = PinnedConstants::builtin();
  const auto q = PinnedConstants::from_json(p.to_json());
  EXPECT_EQ(q.linfty_c, p.linfty_c);
  EXPECT_EQ(q.pairing, p.pairing);
  EXPECT_EQ(q.odd_parity, p.odd_parity);
  // The shipped config file carries the same values as the built-in copy.
  const auto d = PinnedConstants::load_default();
  EXPECT_EQ(d.to_json(), p.to_json());
  auto bad = p.to_json();
  bad["version"] = 99;
  EXPECT_THROW(PinnedConstants::from_json(bad), UsageError);
}
