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

#include <optional>
#include <string>
#include <vector>

#include "triples/bound_report.hpp"
#include "triples/fourier.hpp"
#include "triples/pinned.hpp"

namespace triples {

// n!^3 / n^{3n}, the cube of the trivial bound.
inline LogMagnitude trivial_cube(unsigned long n, mpfr_prec_t prec = 256) {
  const unsigned long arg = n;
  LogMagnitude f = log_combinatorial(Combinatorial::factorial, {&arg, 1}, prec);
  return (f / LogMagnitude::of(power(n, n), prec)).pow(3);
}

inline BigRational trivial_cube_exact(unsigned long n) {
  return power(make_rational(factorial(n), power(n, n)), 3);
}

inline BigInt pairing_count(unsigned m) {
  if (m % 2) throw UsageError("pairing_count needs even m");
  BigInt r = 1;
  for (unsigned k = m; k > 1; k -= 2) r *= k - 1;
  return r;
}

// (-1)^{m/2} / (2^{m/2} (m/2)!) for even m, 0 for odd m.
inline BigRational main_term_coefficient(unsigned m) {
  if (m % 2) return 0;
  const BigRational c = make_rational(1, power(2, m / 2) * factorial(m / 2));
  return (m / 2) % 2 ? BigRational(-c) : c;
}

struct MainTermReport {
  unsigned m = 0;
  unsigned long n = 0;
  BigRational coefficient;
  LogMagnitude main_term;
  std::optional<BigRational> exact_sum;
  // |exact - main| n n^{3n}/n!^3
  std::optional<BigRational> error_ratio;

  nlohmann::json to_json() const {
    nlohmann::json j = {{"m", m}, {"n", n}, {"coefficient", coefficient.get_str()},
                        {"main_term", main_term.to_json()}};
    if (exact_sum) j["exact_sum"] = exact_sum->get_str();
    if (error_ratio) j["error_ratio"] = error_ratio->get_d();
    return j;
  }
};

inline MainTermReport main_term(unsigned m, unsigned long n) {
  MainTermReport r;
  r.m = m;
  r.n = n;
  r.coefficient = main_term_coefficient(m);
  r.main_term = LogMagnitude::of(r.coefficient) * trivial_cube(n);
  return r;
}

// sum over m-sparse characters of S^3, orbit by orbit. The partition formula
// covers m <= 8; beyond that the recursion, with every orbit enumerated, so n <= 9.
inline BigRational msparse_cube_sum(unsigned m, unsigned long n, unsigned threads = 1) {
  if (m > n) return 0;
  const bool partition = m <= 8;
  if (!partition && n > 9) throw LimitExceeded("msparse_cube_sum needs m <= 8 or n <= 9");
  OrbitFilter f;
  f.max_sparsity = m;
  f.zero_sum_only = true;
  f.exhaustive_limit = 9;
  std::vector<CharacterMultiset> orbits;
  for_each_orbit(n, f, [&](const CharacterMultiset& chi) {
    if (chi.sparsity() == m) orbits.push_back(chi);
  });
  RecursionMemo memo;
  auto terms = parallel_map(orbits.size(), threads, [&](std::size_t i) {
    const BigInt v = partition ? partition_scaled(orbits[i]) : recursive_scaled(orbits[i], memo);
    return BigInt(orbits[i].orbit_size() * v * v * v);
  });
  BigInt num = 0;
  for (const auto& t : terms) num += t;
  return make_rational(num, power(n, 3 * n));
}

inline MainTermReport main_term_with_sum(unsigned m, unsigned long n, unsigned threads = 1) {
  MainTermReport r = main_term(m, n);
  r.exact_sum = msparse_cube_sum(m, n, threads);
  const BigRational normalized = *r.exact_sum / trivial_cube_exact(n);
  r.error_ratio = abs(normalized - r.coefficient) * BigRational(n);
  return r;
}

// |S^| <= (n-m)!/n^n * (sum_{killing P} |mu(P)|) * n^k, k the largest number of
// parts of a killing partition.
inline BoundReport max_parts_bound_check(const CharacterMultiset& chi) {
  const unsigned long n = chi.n();
  const auto values = chi.nonzero_values();
  const KillingSummary s = summarize_killing(n, values);
  const BigInt fm = factorial(n - values.size());
  const BigInt measured = abs(fm * s.weighted_sum);
  const BigInt bound = s.count == 0 ? BigInt(0) : BigInt(fm * s.abs_mobius_sum * power(n, s.max_parts));
  const LogMagnitude nn = LogMagnitude::of(power(n, n));
  return BoundReport::make_exact(chi.to_string(), LogMagnitude::of(measured) / nn, LogMagnitude::of(bound) / nn,
                                 measured <= bound,
                                 {{"max_parts", s.max_parts}, {"killing_partitions", s.count},
                                  {"abs_mobius_sum", s.abs_mobius_sum.get_str()}});
}

// True when exactly one killing partition has m/2 parts, so it is a perfect
// pairing of nonzero values.
inline bool uniquely_paired(const CharacterMultiset& chi) {
  const auto values = chi.nonzero_values();
  const unsigned m = static_cast<unsigned>(values.size());
  if (m == 0 || m % 2) return false;
  const KillingSummary s = summarize_killing(chi.n(), values);
  return s.max_parts == m / 2 && s.count_with_max_parts == 1;
}

// 1 + E = S^ n^{m/2} n^n / ((-1)^{m/2} n!).
inline BigRational pairing_error(const CharacterMultiset& chi) {
  if (!uniquely_paired(chi))
    throw UsageError("pairing_term_check: " + chi.to_string() + " is not killed by a unique perfect pairing");
  const unsigned long n = chi.n();
  const unsigned long m = chi.sparsity();
  BigRational r = make_rational(partition_scaled(chi) * power(n, m / 2), factorial(n));
  if ((m / 2) % 2) r = -r;
  return r - 1;
}

// n|E| against the pinned constant for this m.
inline BoundReport pairing_term_check(const CharacterMultiset& chi, const PinnedConstants& pins) {
  const BigRational e = pairing_error(chi);
  const unsigned m = static_cast<unsigned>(chi.sparsity());
  const BigRational scaled = abs(e) * BigRational(chi.n());
  auto it = pins.pairing.find(m);
  if (it == pins.pairing.end()) throw UsageError("no pinned pairing constant for m=" + std::to_string(m));
  const BigRational c(it->second);
  return BoundReport::make_exact(chi.to_string(), LogMagnitude::of(scaled), LogMagnitude::of(c), scaled <= c,
                                 {{"E", e.get_str()}, {"n_abs_E", scaled.get_d()}, {"pinned", it->second}});
}

// (1/n, -1/n, 2/n, -2/n, ...): uniquely paired once n > m + 1 for odd n.
inline CharacterMultiset standard_pairing(unsigned m, unsigned long n) {
  std::vector<CharacterMultiset::Part> parts;
  for (unsigned j = 1; j <= m / 2; ++j) {
    parts.push_back({{j % n}, 1});
    parts.push_back({{(n - j % n) % n}, 1});
  }
  parts.push_back({{0}, static_cast<unsigned>(n - m)});
  return CharacterMultiset::from_parts(n, std::move(parts));
}

// n |sum over m-sparse S^3| n^{3n}/n!^3 for odd m, against its pinned constant.
inline BoundReport odd_parity_check(unsigned m, unsigned long n, const PinnedConstants& pins, unsigned threads = 1) {
  if (m % 2 == 0) throw UsageError("odd_parity_check needs odd m");
  const BigRational ratio = abs(msparse_cube_sum(m, n, threads)) / trivial_cube_exact(n) * BigRational(n);
  auto it = pins.odd_parity.find(m);
  if (it == pins.odd_parity.end()) throw UsageError("no pinned parity constant for m=" + std::to_string(m));
  const BigRational c(it->second);
  return BoundReport::make_exact("odd m=" + std::to_string(m) + " n=" + std::to_string(n), LogMagnitude::of(ratio),
                                 LogMagnitude::of(c), ratio <= c, {{"ratio", ratio.get_d()}, {"pinned", it->second}});
}

// sum_{m=0}^{M} (-1)^m / (2^m m!), partial sums of e^{-1/2}.
inline BigRational singular_series_exact(unsigned M) {
  BigRational s = 0;
  for (unsigned m = 0; m <= M; ++m) {
    const BigRational t = make_rational(1, power(2, m) * factorial(m));
    s += m % 2 ? BigRational(-t) : t;
  }
  return s;
}

inline Real singular_series(unsigned M, mpfr_prec_t prec = 256) { return Real(prec, singular_series_exact(M)); }

}  // namespace triples
