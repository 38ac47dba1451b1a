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

#include <cstdint>
#include <numeric>
#include <vector>

#include "triples/cyclotomic.hpp"
#include "triples/enumeration.hpp"
#include "triples/group.hpp"

namespace triples {

enum class BrutePath { automatic, sparse_injections, full_bijections };

namespace detail {

inline void injection_histogram(unsigned long n, const std::vector<unsigned long>& b, std::size_t i,
                                Mask used, unsigned long phase, std::vector<std::uint64_t>& hist) {
  if (i == b.size()) {
    ++hist[phase];
    return;
  }
  for (unsigned long x = 0; x < n; ++x) {
    if (used & (Mask{1} << x)) continue;
    injection_histogram(n, b, i + 1, used | (Mask{1} << x), (phase + b[i] * x) % n, hist);
  }
}

inline bool sparse_path_feasible(unsigned long n, unsigned long m) {
  if (m > 8 || n > 50) return false;
  return falling_factorial(n, m) <= 500'000'000;
}

}  // namespace detail

// n^n * S^(chi) as an exact element of Z[zeta_n], straight from the definition
// as a sum of e(-sum r_i x_i) over distinct x. The sparse path sums over
// injections of the m nonzero coordinates and scales by (n-m)!; the full path
// sums over all n! bijections.
inline CyclotomicValue brute_fourier(const CharacterMultiset& chi, BrutePath path = BrutePath::automatic) {
  const unsigned long n = chi.n();
  const unsigned long m = chi.sparsity();
  if (n > 63) throw LimitExceeded("brute fourier limited to n <= 63");
  if (path == BrutePath::automatic) {
    if (detail::sparse_path_feasible(n, m)) {
      path = BrutePath::sparse_injections;
    } else if (n <= 9) {
      path = BrutePath::full_bijections;
    } else {
      throw LimitExceeded("brute fourier infeasible for " + chi.to_string());
    }
  }
  std::vector<std::uint64_t> hist(n, 0);
  BigInt scale = 1;
  if (path == BrutePath::sparse_injections) {
    if (!detail::sparse_path_feasible(n, m))
      throw LimitExceeded("sparse brute path needs m <= 8, n <= 50 and n^(m) <= 5e8");
    std::vector<unsigned long> b;
    for (auto v : chi.nonzero_values()) b.push_back(v.numerator);
    detail::injection_histogram(n, b, 0, 0, 0, hist);
    scale = factorial(n - m);
  } else {
    if (n > 9) throw LimitExceeded("full brute path limited to n <= 9");
    std::vector<unsigned long> b;
    for (auto v : chi.expanded()) b.push_back(v.numerator);
    std::vector<unsigned long> x(n);
    std::iota(x.begin(), x.end(), 0ul);
    do {
      unsigned long phase = 0;
      for (unsigned long i = 0; i < n; ++i) phase += b[i] * x[i];
      ++hist[phase % n];
    } while (std::next_permutation(x.begin(), x.end()));
  }
  CyclotomicValue v(n);
  for (unsigned long s = 0; s < n; ++s)
    if (hist[s]) v.add_root_multiple(-static_cast<long>(s), BigInt(static_cast<unsigned long>(hist[s])) * scale);
  return v;
}

}  // namespace triples
