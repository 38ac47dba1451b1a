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

namespace {
std::vector<DualElement> values(std::initializer_list<unsigned long> v) {
  std::vector<DualElement> out;
  for (auto b : v) out.push_back({b});
  return out;
}
}  // namespace

TEST(Character, Canonicalize) {
  const auto a = values({1, 0, 2});
  const auto chi = canonicalize(3, a);
  EXPECT_EQ(chi.sparsity(), 2u);
  EXPECT_EQ(chi.distinct(), 3u);
  EXPECT_EQ(chi, parse_character("n=3;(0,1/3,2/3)"));

  const auto zeros = values({0, 0, 0, 0, 0});
  const auto z = canonicalize(5, zeros);
  EXPECT_EQ(z.sparsity(), 0u);
  EXPECT_EQ(z.entropy(), 0.0);

  const auto b = values({1, 1, 4, 4, 0});
  const auto c = canonicalize(5, b);
  EXPECT_TRUE(c.zero_sum());
  EXPECT_EQ(c.multiplicity_of(1), 2u);
  EXPECT_EQ(c.multiplicity_of(4), 2u);
  EXPECT_FALSE(parse_character("n=5;(0^3,1/5,2/5)").zero_sum());

  const auto short_list = values({0, 1});
  EXPECT_THROW(canonicalize(3, short_list), UsageError);
  const auto out_of_range = values({0, 1, 3});
  EXPECT_THROW(canonicalize(3, out_of_range), UsageError);
}

TEST(Character, TextRoundTrip) {
  for (const char* text : {"n=7;(0^3,1/7^2,6/7^2)", "n=33;(0^11,1/3^11,2/3^11)", "n=1;(0)"}) {
    const auto chi = parse_character(text);
    EXPECT_EQ(parse_character(chi.to_string()), chi) << text;
  }
  // 1/3 of Z/9Z is 3/9.
  EXPECT_EQ(parse_character("n=9;(0^7,1/3,2/3)"), parse_character("n=9;(0^7,3/9,6/9)"));
  EXPECT_THROW(parse_character("n=7;(0^3,1/7^2)"), UsageError);
  EXPECT_THROW(parse_character("n=7;(0^6,1/2)"), UsageError);
  EXPECT_THROW(parse_character("7;(0^7)"), UsageError);
  EXPECT_THROW(parse_character("n=7;0^7"), UsageError);
}

TEST(Character, ShiftNormalize) {
  const auto all = parse_character("n=5;(1/5^5)");
  const auto s = shift_normalize(all);
  EXPECT_EQ(s.character, parse_character("n=5;(0^5)"));
  EXPECT_EQ(s.shift.numerator, 4u);
  EXPECT_EQ(all.shifted(s.shift), s.character);

  const auto sparse = parse_character("n=5;(0^3,1/5^2)");
  EXPECT_EQ(shift_normalize(sparse).shift.numerator, 0u);

  // Tie between 0 and 1/5: the lexicographically smaller image wins.
  const auto tie = parse_character("n=5;(0^2,1/5^2,2/5)");
  const auto t = shift_normalize(tie);
  const auto by0 = tie.shifted({0}), by4 = tie.shifted({4});
  EXPECT_EQ(t.character, std::min(by0, by4));
  EXPECT_EQ(t.character.multiplicity_of(0), 2u);
}

TEST(Character, Entropy) {
  EXPECT_EQ(parse_character("n=6;(1/6^6)").entropy(), 0.0);
  EXPECT_NEAR(parse_character("n=4;(0^2,1/4^2)").entropy(), std::log(6.0) / 4, 1e-15);
  EXPECT_NEAR(parse_character("n=6;(0^2,1/6^2,2/6^2)").entropy(), std::log(90.0) / 6, 1e-15);
}

TEST(Character, OrbitSize) {
  EXPECT_EQ(parse_character("n=9;(0^8,1/9)").orbit_size(), 9);
  EXPECT_EQ(parse_character("n=9;(0^9)").orbit_size(), 1);
  EXPECT_EQ(parse_character("n=7;(0^3,1/7^2,3/7^2)").orbit_size(), 210);
}

TEST(Orbits, Counts) {
  EXPECT_EQ(enumerate_orbits(3).size(), 10u);
  EXPECT_EQ(enumerate_orbits(7).size(), 1716u);
  OrbitFilter f;
  f.max_sparsity = 2;
  const auto sparse = enumerate_orbits(5, f);
  EXPECT_EQ(BigInt(sparse.size()), orbit_count(5, 2));
  for (const auto& chi : sparse) EXPECT_LE(chi.sparsity(), 2u);
}

// The orbit sizes add up to all n^n characters.
TEST(Orbits, SizesPartitionTheDualGroup) {
  for (unsigned long n = 1; n <= 7; ++n) {
    BigInt total = 0;
    for (const auto& chi : enumerate_orbits(n)) total += chi.orbit_size();
    EXPECT_EQ(total, power(n, n)) << n;
  }
}

TEST(Orbits, Filters) {
  OrbitFilter zs;
  zs.zero_sum_only = true;
  for (const auto& chi : enumerate_orbits(7, zs)) EXPECT_TRUE(chi.zero_sum());
  OrbitFilter window;
  window.entropy_range = std::make_pair(0.5, 1.0);
  for (const auto& chi : enumerate_orbits(6, window)) {
    EXPECT_GE(chi.entropy(), 0.5);
    EXPECT_LT(chi.entropy(), 1.0);
  }
  EXPECT_THROW(enumerate_orbits(12), LimitExceeded);
  OrbitFilter sparse;
  sparse.max_sparsity = 3;
  EXPECT_EQ(BigInt(enumerate_orbits(31, sparse).size()), orbit_count(31, 3));
}
