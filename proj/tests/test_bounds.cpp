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
const std::vector<SpectrumEntry>& spec(unsigned long n) {
  static std::map<unsigned long, std::vector<SpectrumEntry>> memo;
  auto it = memo.find(n);
  if (it == memo.end()) it = memo.emplace(n, spectrum(n)).first;
  return it->second;
}
}  // namespace

TEST(EntropyBound, ZeroFailures) {
  for (unsigned long n : {3ul, 5ul, 7ul}) EXPECT_EQ(count_failures(entropy_bound_check(spec(n))), 0u) << n;
  for (const auto& r : entropy_bound_check(spec(7))) {
    if (r.subject == "n=7;(0^5,1/7,6/7)") {
      // 7*120/7^7 against 42^{-1/2} (5040/823543)^{1/2}
      const double bound = std::sqrt(5040.0 / 823543 / 42);
      EXPECT_NEAR(r.bound.ln_abs_double(), std::log(bound), 1e-12);
      EXPECT_NEAR(r.measured.ln_abs_double(), std::log(840.0 / 823543), 1e-12);
    }
  }
}

TEST(SrhBound, ZeroFailuresAndEqualityAtZero) {
  for (unsigned long n : {3ul, 4ul, 5ul, 6ul, 7ul}) EXPECT_EQ(count_failures(srh_bound_check(spec(n))), 0u) << n;
  for (const auto& r : srh_bound_check(spec(7)))
    if (r.subject == "n=7;(0^7)") EXPECT_NEAR(r.margin, 0.0, 1e-12);
  // Even-n diagnostic: (1/2)^2 0^2 has V = 8, so V^2 multinomial = 384 against
  // 5 * 4!^2 = 2880 and the margin is ln(7.5)/2.
  EXPECT_EQ(abs(partition_scaled(parse_character("n=4;(0^2,1/2^2)"))), 8);
  for (const auto& r : srh_bound_check(spec(4)))
    if (r.subject == "n=4;(0^2,1/2^2)") EXPECT_NEAR(r.margin, std::log(7.5) / 2, 1e-12);
}

TEST(TailBound, ThresholdsPass) {
  for (unsigned long n : {3ul, 5ul, 7ul})
    for (double R : {0.0, 1.0, 2.0, 3.0, 10.0}) EXPECT_TRUE(tail_bound_check(spec(n), R).pass) << n << " " << R;
  const auto empty = tail_bound_check(spec(5), 10);
  EXPECT_EQ(empty.detail.at("orbits"), 0);
  EXPECT_TRUE(empty.measured.is_zero());
}

TEST(Um, Table) {
  const auto t = um_solve(7, 7);
  EXPECT_EQ(t.at(1), 0);
  EXPECT_EQ(t.at(2), make_rational(840, 823543));
  EXPECT_THROW(um_solve(7, 1), UsageError);
  EXPECT_THROW(um_solve(7, 8), UsageError);
}

TEST(Um, DominationAndTightness) {
  for (unsigned long n : {3ul, 5ul, 7ul}) {
    const auto reports = um_domination_check(spec(n), um_solve(n, static_cast<unsigned>(n)));
    EXPECT_EQ(count_failures(reports), 0u) << n;
    // U_1 = 0 is attained, and so is U_2.
    EXPECT_TRUE(reports.at(0).measured.is_zero());
    EXPECT_TRUE(reports.at(0).detail.at("tight").get<bool>());
    EXPECT_TRUE(reports.at(1).detail.at("tight").get<bool>()) << n;
  }
}

TEST(MatrixIdentities, Exact) {
  EXPECT_TRUE(matrix_identities_check(3, 30).pass);
  EXPECT_TRUE(matrix_identities_check(4, 12).pass);
  EXPECT_THROW(matrix_identities_check(2, 30), UsageError);
  EXPECT_THROW(matrix_identities_check(11, 30), UsageError);
  const auto sweep = matrix_identities_sweep(200);
  EXPECT_GT(sweep.size(), 5000u);
  EXPECT_EQ(count_failures(sweep), 0u);
}

TEST(Linfty, PinnedRatio) {
  const double c = PinnedConstants::builtin().linfty_c;
  for (unsigned long n : {3ul, 5ul, 7ul}) EXPECT_EQ(count_failures(linfty_ratio_report(spec(n), c)), 0u) << n;
  EXPECT_TRUE(std::isinf(linfty_rho(0, 1, 7).to_double()));
  // (r,-r) at n = 7: rho = ln(840 * 2 * sqrt(21) / 5040)
  EXPECT_NEAR(linfty_rho(-840, 2, 7).to_double(), std::log(840.0 * 2 * std::sqrt(21.0) / 5040), 1e-12);
  // A constant smaller than the pinned one must produce failures.
  EXPECT_GT(count_failures(linfty_ratio_report(spec(7), c / 2)), 0u);
}

TEST(Census, Totals) {
  const std::vector<double> th = {0.25, 0.5, 0.75, 1.0, 1.5};
  for (unsigned long n : {3ul, 5ul, 7ul}) {
    BigInt total = 0;
    for (const auto& b : entropy_census(n, th)) total += b.count;
    EXPECT_EQ(total, power(n, n));
  }
  const auto buckets = entropy_census(5, {1e-12});
  EXPECT_EQ(buckets.front().count, 5);  // constant characters only
  BigInt prev = 0;
  for (double h = 0; h <= 2.0; h += 0.1) {
    const BigInt c = census_at_most(7, h);
    EXPECT_GE(c, prev);
    prev = c;
  }
  EXPECT_EQ(census_at_most(7, 10), power(7, 7));
}

TEST(Regions, ExactPartition) {
  for (unsigned long n : {3ul, 5ul, 7ul}) {
    for (auto [eps, R] : {std::pair{0.01, 3.0}, std::pair{0.3, 10.0}, std::pair{0.0005, 0.001}, std::pair{1.0, 1.2}}) {
      const auto r = region_decomposition(spec(n), eps, R);
      EXPECT_EQ(r.total(), cube_sum(n)) << n << " " << eps << " " << R;
    }
  }
  const auto tiny = region_decomposition(spec(7), 0.0005, 0.001);
  EXPECT_EQ(tiny.medium, 0);
  EXPECT_EQ(tiny.low_orbits, 7u);  // the constant characters, H = 0
  EXPECT_THROW(region_decomposition(spec(5), 0.5, 0.2), UsageError);
}

// Every character that is at most 2-sparse after a shift has H <= ln(42)/7 at
// n = 7, so that threshold (not 0.3) puts them all in the low region.
TEST(Regions, SparseCharactersAreLowEntropy) {
  const double eps = std::log(42.0) / 7 + 1e-9;
  for (const auto& e : spec(7)) {
    const auto norm = shift_normalize(e.chi);
    if (norm.character.sparsity() <= 2) EXPECT_LE(e.chi.entropy(), eps) << e.chi.to_string();
  }
  EXPECT_GT(parse_character("n=7;(0^5,1/7,2/7)").entropy(), 0.3);
}
