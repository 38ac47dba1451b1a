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

TEST(Orthomorphisms, KnownCounts) {
  const unsigned long ortho[][2] = {{1, 1}, {3, 3}, {5, 15}, {7, 133}, {9, 2025}, {11, 37851}};
  for (const auto& [n, count] : ortho) {
    const auto r = count_orthomorphisms(n);
    EXPECT_EQ(r.orthomorphisms, count) << n;
    EXPECT_EQ(r.s_n, factorial(n) * count) << n;
  }
  EXPECT_EQ(count_orthomorphisms(3).s_n, 18);
  EXPECT_EQ(count_orthomorphisms(5).s_n, 1800);
}

TEST(Orthomorphisms, EvenOrderIsZero) {
  for (unsigned long n : {2ul, 4ul, 6ul, 8ul, 10ul, 12ul}) EXPECT_EQ(count_orthomorphisms(n).orthomorphisms, 0) << n;
}

TEST(Orthomorphisms, FixZeroAndThreadsAgree) {
  CountOptions a, b;
  b.fix_zero = true;
  b.threads = 4;
  for (unsigned long n : {5ul, 7ul, 9ul}) EXPECT_EQ(count_orthomorphisms(n, a).s_n, count_orthomorphisms(n, b).s_n);
}

TEST(Orthomorphisms, Limits) {
  EXPECT_THROW(count_orthomorphisms(0), UsageError);
  EXPECT_THROW(count_orthomorphisms(17), LimitExceeded);
}

TEST(DirectCount, MatchesBacktracking) {
  EXPECT_EQ(count_triples_direct(2), 0);
  EXPECT_EQ(count_triples_direct(3), 18);
  EXPECT_EQ(count_triples_direct(5), 1800);
  EXPECT_EQ(count_triples_direct(4, 3), 0);
  EXPECT_THROW(count_triples_direct(8), LimitExceeded);
}

TEST(GeneralGroup, CyclicMatchesOrthomorphisms) {
  EXPECT_EQ(count_general_group(GroupSpec::parse("3")), 18);
  EXPECT_EQ(count_general_group(GroupSpec::parse("9")), factorial(9) * 2025);
  EXPECT_EQ(count_general_group_direct(GroupSpec::parse("5")), 1800);
  // Z/3 x Z/5 is cyclic of order 15, past the search limit.
  EXPECT_THROW(count_general_group(GroupSpec::parse("3x5")), LimitExceeded);
}

TEST(GeneralGroup, ElementaryAbelian) {
  EXPECT_EQ(count_general_group(GroupSpec::parse("3x3")), BigInt(813214080));
  EXPECT_EQ(count_general_group(GroupSpec::parse("3x3"), 4), BigInt(813214080));
  EXPECT_THROW(count_general_group(GroupSpec::parse("2x3")), EvenOrderError);
  EXPECT_THROW(GroupSpec::parse("3xx3"), UsageError);
}

TEST(MonteCarlo, WithinThreeStandardErrors) {
  const auto r = monte_carlo_collision(3, 100000, 11);
  EXPECT_LT(std::abs(r.estimate - 0.5), 3 * r.standard_error);
  const auto e = monte_carlo_collision(6, 20000, 11);
  EXPECT_EQ(e.hits, 0u);
  EXPECT_EQ(e.estimate, 0.0);
}

TEST(MonteCarlo, DependsOnlyOnSeed) {
  const auto a = monte_carlo_collision(7, 50000, 42, 1);
  const auto b = monte_carlo_collision(7, 50000, 42, 8);
  const auto c = monte_carlo_collision(7, 50000, 43, 1);
  EXPECT_EQ(a.hits, b.hits);
  EXPECT_NE(a.hits, c.hits);
  EXPECT_THROW(monte_carlo_collision(7, 10, 1), UsageError);
}
