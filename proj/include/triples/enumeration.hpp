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

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "triples/bigint.hpp"
#include "triples/errors.hpp"
#include "triples/parallel.hpp"

namespace triples {

struct CountResult {
  unsigned long n = 0;
  BigInt orthomorphisms;
  BigInt s_n;  // n! * orthomorphisms
  double elapsed_ms = 0;
};

struct CountOptions {
  unsigned long limit = 15;
  // Count only pi(0) = 0 and multiply by n; shifting pi by a constant
  // preserves orthomorphisms and every shift orbit has exactly n members.
  bool fix_zero = false;
  unsigned threads = 1;
};

namespace detail {

using Mask = std::uint64_t;

inline Mask low_bits(unsigned long n) { return n >= 64 ? ~Mask{0} : ((Mask{1} << n) - 1); }

// Rotates an n-bit mask left by s (bit d moves to bit (d + s) mod n).
inline Mask rotate_n(Mask m, unsigned long s, unsigned long n) {
  if (s == 0) return m;
  return ((m << s) | (m >> (n - s))) & low_bits(n);
}

// Leaves below position x, given used values and used differences pi(y) - y.
inline std::uint64_t ortho_dfs(unsigned long n, unsigned long x, Mask used_values, Mask used_diffs) {
  if (x == n) return 1;
  // value v is admissible iff v unused and (v - x) mod n unused
  const Mask free_by_diff = rotate_n(~used_diffs & low_bits(n), x, n);
  Mask cand = ~used_values & free_by_diff & low_bits(n);
  std::uint64_t total = 0;
  while (cand) {
    const unsigned long v = static_cast<unsigned long>(std::countr_zero(cand));
    cand &= cand - 1;
    const unsigned long d = (v + n - x) % n;
    total += ortho_dfs(n, x + 1, used_values | (Mask{1} << v), used_diffs | (Mask{1} << d));
  }
  return total;
}

}  // namespace detail

// Permutations pi of Z/nZ with x -> pi(x) - x also a permutation, by
// depth-first search over pi(0), pi(1), ... with two bitmasks.
inline CountResult count_orthomorphisms(unsigned long n, const CountOptions& opts = {}) {
  if (n == 0) throw UsageError("n must be positive");
  if (n > opts.limit || n > 63)
    throw LimitExceeded("orthomorphism count limited to n <= " + std::to_string(opts.limit));
  const auto start = std::chrono::steady_clock::now();
  CountResult r;
  r.n = n;
  if (n % 2 == 0 && n > 8) {
    // pi(x) - x sums to n/2 != 0, so no orthomorphism exists; skip the search.
    r.orthomorphisms = 0;
  } else {
    const unsigned long roots = opts.fix_zero ? 1 : n;
    auto branch = [&](std::size_t v) -> std::uint64_t {
      return detail::ortho_dfs(n, 1, detail::Mask{1} << v, detail::Mask{1} << v);
    };
    auto parts = parallel_map(roots, opts.threads, branch);
    std::uint64_t total = 0;
    for (auto c : parts) total += c;
    r.orthomorphisms = BigInt(static_cast<unsigned long>(total));
    if (opts.fix_zero) r.orthomorphisms *= n;
  }
  r.s_n = factorial(n) * r.orthomorphisms;
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

namespace detail {

inline std::vector<std::vector<unsigned char>> all_permutations(unsigned long n) {
  std::vector<unsigned char> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<unsigned char>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace detail

// s_n by testing every pair of bijections; cost (n!)^2.
inline BigInt count_triples_direct(unsigned long n, unsigned threads = 1) {
  if (n == 0) throw UsageError("n must be positive");
  if (n > 7) throw LimitExceeded("direct triple count limited to n <= 7");
  const auto perms = detail::all_permutations(n);
  const detail::Mask full = detail::low_bits(n);
  auto row = [&](std::size_t i) -> unsigned long {
    unsigned long hits = 0;
    const auto& p = perms[i];
    for (const auto& q : perms) {
      detail::Mask seen = 0;
      for (unsigned long x = 0; x < n; ++x) seen |= detail::Mask{1} << ((p[x] + q[x]) % n);
      hits += seen == full;
    }
    return hits;
  };
  auto rows = parallel_map(perms.size(), threads, row);
  BigInt total = 0;
  for (auto h : rows) total += h;
  return total;
}

// Finite abelian group Z/n_1 x ... x Z/n_r.
struct GroupSpec {
  std::vector<unsigned long> orders;

  unsigned long size() const {
    unsigned long s = 1;
    for (auto o : orders) s *= o;
    return s;
  }
  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < orders.size(); ++i) s += (i ? "x" : "") + std::to_string(orders[i]);
    return s;
  }

  // "9", "3x3", "3x5"
  static GroupSpec parse(const std::string& text) {
    GroupSpec g;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const auto x = text.find('x', pos);
      const std::string tok = text.substr(pos, x == std::string::npos ? std::string::npos : x - pos);
      if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        throw UsageError("malformed group spec '" + text + "'");
      const unsigned long o = std::stoul(tok);
      if (o == 0) throw UsageError("group factor orders must be positive");
      g.orders.push_back(o);
      if (x == std::string::npos) break;
      pos = x + 1;
    }
    return g;
  }

  // Elements are mixed-radix indices; returns the (a + b) and (a - b) tables.
  std::pair<std::vector<unsigned>, std::vector<unsigned>> tables() const {
    const unsigned long n = size();
    std::vector<unsigned> add(n * n), sub(n * n);
    auto digits = [&](unsigned long a) {
      std::vector<unsigned long> d;
      for (auto o : orders) {
        d.push_back(a % o);
        a /= o;
      }
      return d;
    };
    auto compose = [&](const std::vector<unsigned long>& d) {
      unsigned long a = 0, w = 1;
      for (std::size_t i = 0; i < orders.size(); ++i) {
        a += d[i] * w;
        w *= orders[i];
      }
      return a;
    };
    for (unsigned long a = 0; a < n; ++a) {
      const auto da = digits(a);
      for (unsigned long b = 0; b < n; ++b) {
        const auto db = digits(b);
        std::vector<unsigned long> s(orders.size()), t(orders.size());
        for (std::size_t i = 0; i < orders.size(); ++i) {
          s[i] = (da[i] + db[i]) % orders[i];
          t[i] = (da[i] + orders[i] - db[i]) % orders[i];
        }
        add[a * n + b] = static_cast<unsigned>(compose(s));
        sub[a * n + b] = static_cast<unsigned>(compose(t));
      }
    }
    return {add, sub};
  }
};

namespace detail {

inline std::uint64_t group_ortho_dfs(unsigned long n, const std::vector<unsigned>& sub, unsigned long x,
                                     Mask used_values, Mask used_diffs) {
  if (x == n) return 1;
  Mask cand = ~used_values & low_bits(n);
  std::uint64_t total = 0;
  while (cand) {
    const unsigned long v = static_cast<unsigned long>(std::countr_zero(cand));
    cand &= cand - 1;
    const unsigned d = sub[v * n + x];
    if (used_diffs & (Mask{1} << d)) continue;
    total += group_ortho_dfs(n, sub, x + 1, used_values | (Mask{1} << v), used_diffs | (Mask{1} << d));
  }
  return total;
}

}  // namespace detail

// s(G): pairs of bijections {1..|G|} -> G whose pointwise sum is a bijection,
// computed as |G|! times the number of orthomorphisms of G.
inline BigInt count_general_group(const GroupSpec& spec, unsigned threads = 1) {
  const unsigned long n = spec.size();
  if (n % 2 == 0) throw EvenOrderError("general group count requires odd order (|G| = " + std::to_string(n) + ")");
  if (n > 13) throw LimitExceeded("general group count limited to |G| <= 13");
  const auto sub = spec.tables().second;
  auto branch = [&](std::size_t v) -> std::uint64_t {
    const unsigned d = sub[v * n + 0];
    return detail::group_ortho_dfs(n, sub, 1, detail::Mask{1} << v, detail::Mask{1} << d);
  };
  auto parts = parallel_map(n, threads, branch);
  std::uint64_t total = 0;
  for (auto c : parts) total += c;
  return factorial(n) * BigInt(static_cast<unsigned long>(total));
}

// Same quantity by iterating all pairs of bijections; |G| <= 7.
inline BigInt count_general_group_direct(const GroupSpec& spec) {
  const unsigned long n = spec.size();
  if (n % 2 == 0) throw EvenOrderError("general group count requires odd order");
  if (n > 7) throw LimitExceeded("direct group count limited to |G| <= 7");
  const auto add = spec.tables().first;
  const auto perms = detail::all_permutations(n);
  BigInt total = 0;
  for (const auto& p : perms)
    for (const auto& q : perms) {
      detail::Mask seen = 0;
      for (unsigned long x = 0; x < n; ++x) seen |= detail::Mask{1} << add[p[x] * n + q[x]];
      if (seen == detail::low_bits(n)) ++total;
    }
  return total;
}

struct MonteCarloResult {
  unsigned long n = 0;
  std::uint64_t samples = 0;
  std::uint64_t hits = 0;
  double estimate = 0;
  double standard_error = 0;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Uniform in [0, bound) by rejection, independent of the standard library's
// distribution implementation.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  for (;;) {
    const std::uint64_t x = rng();
    if (x < limit) return x % bound;
  }
}

inline void shuffle(std::vector<unsigned>& p, std::mt19937_64& rng) {
  for (std::size_t i = p.size(); i > 1; --i) std::swap(p[i - 1], p[uniform_below(rng, i)]);
}

}  // namespace detail

// Fraction of independent uniform bijection pairs whose sum is a bijection.
// Work is cut into a fixed number of streams, each with its own generator, so
// the result depends only on (n, samples, seed).
inline MonteCarloResult monte_carlo_collision(unsigned long n, std::uint64_t samples, std::uint64_t seed,
                                              unsigned threads = 1) {
  if (n == 0 || n > 63) throw UsageError("monte carlo requires 1 <= n <= 63");
  if (samples < 1000) throw UsageError("monte carlo requires at least 1000 samples");
  constexpr std::size_t kStreams = 64;
  auto stream = [&](std::size_t s) -> std::uint64_t {
    std::uint64_t state = seed ^ (0xd1b54a32d192ed03ULL * (s + 1));
    std::mt19937_64 rng(detail::splitmix64(state));
    const std::uint64_t count = samples / kStreams + (s < samples % kStreams ? 1 : 0);
    std::vector<unsigned> p(n), q(n);
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < count; ++i) {
      std::iota(p.begin(), p.end(), 0u);
      std::iota(q.begin(), q.end(), 0u);
      detail::shuffle(p, rng);
      detail::shuffle(q, rng);
      detail::Mask seen = 0;
      for (unsigned long x = 0; x < n; ++x) seen |= detail::Mask{1} << ((p[x] + q[x]) % n);
      hits += seen == detail::low_bits(n);
    }
    return hits;
  };
  auto per_stream = parallel_map(kStreams, threads, stream);
  MonteCarloResult r;
  r.n = n;
  r.samples = samples;
  for (auto h : per_stream) r.hits += h;
  r.estimate = static_cast<double>(r.hits) / static_cast<double>(samples);
  r.standard_error = std::sqrt(r.estimate * (1 - r.estimate) / static_cast<double>(samples));
  return r;
}

}  // namespace triples
