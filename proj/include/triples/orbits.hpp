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

#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "triples/group.hpp"

namespace triples {

struct OrbitFilter {
  std::optional<unsigned long> max_sparsity;
  // Half-open entropy window [lo, hi).
  std::optional<std::pair<double, double>> entropy_range;
  bool zero_sum_only = false;
  // Full (unfiltered by sparsity) enumeration is refused above this n.
  unsigned long exhaustive_limit = 9;
};

// Number of multisets the enumeration will walk: multisets of n values from n
// symbols with at most m nonzero entries.
inline BigInt orbit_count(unsigned long n, unsigned long max_sparsity) {
  BigInt total = 0;
  for (unsigned long j = 0; j <= std::min(max_sparsity, n); ++j)
    total += n > 1 ? binomial(n - 1 + j - 1, j) : BigInt(j == 0 ? 1 : 0);
  return total;
}

// Calls visit(chi) once per permutation orbit of characters of (Z/nZ)^n, in a
// fixed order (zero multiplicity descending, then lexicographic on counts).
template <typename Visitor>
void for_each_orbit(unsigned long n, const OrbitFilter& filter, Visitor&& visit) {
  const unsigned long m_max = filter.max_sparsity ? std::min(*filter.max_sparsity, n) : n;
  if (!filter.max_sparsity || m_max == n) {
    if (n > filter.exhaustive_limit)
      throw LimitExceeded("full orbit enumeration limited to n <= " +
                          std::to_string(filter.exhaustive_limit));
  } else if (orbit_count(n, m_max) > 20'000'000) {
    throw LimitExceeded("sparse orbit enumeration too large");
  }
  std::vector<unsigned> counts(n, 0);
  // Position b in [1, n) distributes `left` nonzero coordinates.
  std::function<void(unsigned long, unsigned long)> rec = [&](unsigned long b, unsigned long left) {
    if (left == 0) {
      auto chi = CharacterMultiset::from_counts(counts);
      if (filter.zero_sum_only && !chi.zero_sum()) return;
      if (filter.entropy_range) {
        const double h = chi.entropy();
        if (h < filter.entropy_range->first || h >= filter.entropy_range->second) return;
      }
      visit(chi);
      return;
    }
    if (b >= n) return;
    for (unsigned long c = left + 1; c-- > 0;) {
      counts[b] = static_cast<unsigned>(c);
      rec(b + 1, left - c);
    }
    counts[b] = 0;
  };
  for (unsigned long zeros = n + 1; zeros-- > n - m_max;) {
    counts.assign(n, 0);
    counts[0] = static_cast<unsigned>(zeros);
    rec(1, n - zeros);
  }
}

inline std::vector<CharacterMultiset> enumerate_orbits(unsigned long n, const OrbitFilter& filter = {}) {
  std::vector<CharacterMultiset> out;
  for_each_orbit(n, filter, [&](const CharacterMultiset& chi) { out.push_back(chi); });
  return out;
}

}  // namespace triples
