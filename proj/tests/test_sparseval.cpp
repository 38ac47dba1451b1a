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

#include "triples.hpp"

using namespace triples;

TEST(Q, ClosedForms) {
  for (unsigned long n = 1; n <= 30; ++n) {
    EXPECT_EQ(q_exact(0, n).value, 1) << n;
    EXPECT_EQ(q_exact(1, n).value, 0) << n;
    if (n >= 2) EXPECT_EQ(q_exact(2, n).value, make_rational(n, 2)) << n;
  }
  EXPECT_THROW(q_exact(5, 4), UsageError);
}

TEST(Q, RoutesAgree) {
  for (unsigned long n = 1; n <= 30; ++n) {
    for (unsigned long m = 0; m <= n; ++m) {
      const BigRational q = q_exact(m, n).value;
      ASSERT_EQ(q_series(m, n).value, q) << m << "," << n;
      const auto a = a_ell_sequence(m, n);
      ASSERT_EQ(a.size(), m + 1);
      ASSERT_EQ(a.back(), q) << m << "," << n;
      ASSERT_EQ(recomposition(m, n), recomposition_target(m, n)) << m << "," << n;
    }
  }
  EXPECT_EQ(q_series(5, 20).value, q_exact(5, 20).value);
  EXPECT_EQ(a_ell_sequence(7, 30).back(), q_exact(7, 30).value);
}

TEST(Q, RecurrenceSeeds) {
  const auto a = a_ell_sequence(6, 10);
  EXPECT_EQ(a[0], BigRational(power(10, 6)));
  EXPECT_EQ(a[1], BigRational(5 * power(10, 5)));
}

TEST(Q, BruteForce) {
  EXPECT_EQ(q_brute(0, 5).value, 1);
  EXPECT_EQ(q_brute(2, 5).value, make_rational(5, 2));
  for (unsigned long m = 0; m <= 7; ++m) EXPECT_EQ(q_brute(m, 7, 2).value, q_exact(m, 7).value) << m;
  for (unsigned long m = 0; m <= 6; ++m) EXPECT_EQ(q_brute(m, 6).value, q_exact(m, 6).value) << m;
  EXPECT_THROW(q_brute(2, 9), LimitExceeded);
}

TEST(Q, SaddleBound) {
  const auto r = saddle_bound_check(2, 100);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.detail.at("Q"), "50");
  EXPECT_TRUE(saddle_bound_check(1, 9).pass);
  EXPECT_THROW(saddle_bound_check(6, 10), UsageError);
  EXPECT_THROW(saddle_bound_check(0, 10), UsageError);
}

TEST(Q, SaddleBoundSweep) {
  std::size_t failures = 0;
  for (unsigned long n = 10; n <= 200; n += 10)
    for (unsigned long m = 1; 2 * m <= n; ++m) failures += !saddle_bound_check(m, n, 128).pass;
  EXPECT_EQ(failures, 0u);
}
