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

#include <chrono>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "triples/brute_fourier.hpp"
#include "triples/cache.hpp"
#include "triples/fourier_value.hpp"
#include "triples/orbits.hpp"
#include "triples/parallel.hpp"
#include "triples/partitions.hpp"
#include "triples/structured.hpp"

namespace triples {

// S^(chi + t) = e(-t sum_x x) S^(chi): 1 for odd n, (-1)^b for even n, t = b/n.
inline int shift_sign(unsigned long n, DualElement t) {
  return (n % 2 == 0 && t.numerator % 2 == 1) ? -1 : 1;
}

// n^n S^(chi) = (n-m)! sum_{killing P} mu(P) n^{|P|}.
inline BigInt partition_scaled(const CharacterMultiset& chi) {
  if (!chi.zero_sum()) return 0;
  const auto values = chi.nonzero_values();
  if (values.size() > kMaxKillingSize) throw LimitExceeded("partition formula needs sparsity m <= 12");
  return factorial(chi.n() - values.size()) * summarize_killing(chi.n(), values).weighted_sum;
}

inline FourierValue sparse_fourier_partition(const CharacterMultiset& chi) {
  const auto t0 = std::chrono::steady_clock::now();
  FourierValue v;
  v.chi = chi;
  v.method = Method::partition;
  v.scaled = partition_scaled(chi);
  v.elapsed_ms = detail::ms_since(t0);
  return v;
}

// Memo for the recursion, keyed by the shift-normalized canonical text. Safe
// for concurrent use; racing writers store identical exact values.
class RecursionMemo {
 public:
  explicit RecursionMemo(std::size_t capacity = 5'000'000, CoefficientCache* cache = nullptr)
      : capacity_(capacity), cache_(cache) {}

  struct Stats {
    std::size_t entries = 0, hits = 0, misses = 0, cache_hits = 0, capacity = 0;
  };

  std::optional<BigInt> find(const std::string& key) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = map_.find(key);
      if (it != map_.end()) {
        ++hits_;
        return it->second;
      }
    }
    if (cache_) {
      if (auto v = cache_->get(key)) {
        std::lock_guard<std::mutex> lock(mu_);
        ++cache_hits_;
        map_.emplace(key, *v);
        return v;
      }
    }
    std::lock_guard<std::mutex> lock(mu_);
    ++misses_;
    return std::nullopt;
  }

  void store(const std::string& key, const BigInt& v) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      if (map_.size() >= capacity_ && !map_.count(key))
        throw LimitExceeded("recursion memo capacity " + std::to_string(capacity_) + " exceeded (" +
                            std::to_string(hits_) + " hits, " + std::to_string(misses_) + " misses)");
      map_[key] = v;
    }
    if (cache_) cache_->put(key, "recursion", v);
  }

  Stats stats() const {
    std::lock_guard<std::mutex> lock(mu_);
    return {map_.size(), hits_, misses_, cache_hits_, capacity_};
  }

 private:
  std::size_t capacity_;
  CoefficientCache* cache_;
  mutable std::mutex mu_;
  std::map<std::string, BigInt> map_;
  std::size_t hits_ = 0, misses_ = 0, cache_hits_ = 0;
};

// Recursion on the sparsity: with pivot r_m,
//   S^(chi) = -1/(n-m+1) sum_{i<m} S^(r_1, .., r_i + r_m, .., r_{m-1}, 0, ..).
// The pivot minimizes #{j : r_j = -r_m} (ties to the smallest residue), which
// keeps the number of children that drop two levels small.
inline BigInt recursive_scaled(const CharacterMultiset& chi, RecursionMemo& memo) {
  const unsigned long n = chi.n();
  if (!chi.zero_sum()) return 0;
  const ShiftNormalized norm = shift_normalize(chi);
  const int sign = shift_sign(n, norm.shift);
  const CharacterMultiset& c = norm.character;
  const unsigned long m = c.sparsity();
  if (m == 0) return sign * factorial(n);
  const std::string key = c.to_string();
  if (auto v = memo.find(key)) return sign * *v;

  const auto& parts = c.parts();
  std::size_t pivot = parts.size();
  unsigned best = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const unsigned long v = parts[i].value.numerator;
    if (v == 0) continue;
    const unsigned long neg = (n - v) % n;
    unsigned count = c.multiplicity_of(neg);
    if (neg == v) --count;
    if (pivot == parts.size() || count < best) {
      pivot = i;
      best = count;
    }
  }
  const unsigned long p = parts[pivot].value.numerator;
  BigInt sum = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const unsigned long u = parts[i].value.numerator;
    if (u == 0) continue;
    const unsigned mult = parts[i].multiplicity - (i == pivot ? 1 : 0);
    if (mult == 0) continue;
    std::vector<CharacterMultiset::Part> child = parts;
    child[pivot].multiplicity -= 1;
    child[i].multiplicity -= 1;
    child.push_back({{(u + p) % n}, 1});
    child.push_back({{0}, 1});
    sum += BigInt(mult) * recursive_scaled(CharacterMultiset::from_parts(n, std::move(child)), memo);
  }
  const BigInt denom = n - m + 1;
  BigInt q;
  mpz_divexact(q.get_mpz_t(), sum.get_mpz_t(), denom.get_mpz_t());
  if (q * denom != sum) throw Error("recursion produced a non-integral scaled value at " + key);
  q = -q;
  memo.store(key, q);
  return sign * q;
}

inline FourierValue recursive_fourier(const CharacterMultiset& chi, RecursionMemo& memo) {
  const auto t0 = std::chrono::steady_clock::now();
  FourierValue v;
  v.chi = chi;
  v.method = Method::recursion;
  v.scaled = recursive_scaled(chi, memo);
  v.elapsed_ms = detail::ms_since(t0);
  return v;
}

inline FourierValue recursive_fourier(const CharacterMultiset& chi) {
  RecursionMemo memo;
  return recursive_fourier(chi, memo);
}

inline FourierValue brute_fourier_value(const CharacterMultiset& chi, BrutePath path = BrutePath::automatic) {
  const auto t0 = std::chrono::steady_clock::now();
  FourierValue v;
  v.chi = chi;
  v.method = Method::brute;
  v.exact = brute_fourier(chi, path);
  v.scaled = v.exact->as_integer();
  v.elapsed_ms = detail::ms_since(t0);
  return v;
}

struct FourierOptions {
  Method method = Method::automatic;
  DftOptions dft;
  RecursionMemo* memo = nullptr;
};

// auto: partition formula for sparse characters (after shifting the most
// common value to 0), the recursion up to m = 16, then the structured engine.
inline FourierValue compute_fourier(const CharacterMultiset& chi, const FourierOptions& opts = {}) {
  RecursionMemo local;
  RecursionMemo& memo = opts.memo ? *opts.memo : local;
  switch (opts.method) {
    case Method::brute: return brute_fourier_value(chi);
    case Method::partition: return sparse_fourier_partition(chi);
    case Method::recursion: return recursive_fourier(chi, memo);
    case Method::structured_dp: return structured_dp(chi);
    case Method::structured_dft: return structured_dft(chi, opts.dft);
    case Method::automatic: break;
  }
  if (!chi.zero_sum()) return sparse_fourier_partition(chi);
  const auto norm = shift_normalize(chi);
  const unsigned long m = norm.character.sparsity();
  if (m <= 8) {
    FourierValue v = sparse_fourier_partition(norm.character);
    v.chi = chi;
    *v.scaled *= shift_sign(chi.n(), norm.shift);
    return v;
  }
  if (m <= 16) return recursive_fourier(chi, memo);
  const StructuredShape s = structured_shape(chi);
  if (s.a.size() <= 3 && s.n <= 400) return structured_dp(chi);
  return structured_dft(chi, opts.dft);
}

// Expands prod_c (sum_x X_x e(-r_c x)) and reads off the coefficient of
// prod_x X_x, a subset DP over which group elements are already used. This is
// the polynomial form of the Gaussian-integral identity.
inline CyclotomicValue squarefree_coefficient(const CharacterMultiset& chi) {
  const unsigned long n = chi.n();
  if (n > 5) throw LimitExceeded("coefficient identity check limited to n <= 5");
  const auto values = chi.expanded();
  std::vector<std::optional<CyclotomicValue>> dp(std::size_t{1} << n);
  dp[0] = CyclotomicValue::integer(n, 1);
  for (std::size_t mask = 0; mask + 1 < dp.size(); ++mask) {
    if (!dp[mask]) continue;
    const unsigned c = static_cast<unsigned>(std::popcount(mask));
    for (unsigned long x = 0; x < n; ++x) {
      if (mask >> x & 1) continue;
      auto& slot = dp[mask | std::size_t{1} << x];
      CyclotomicValue term = dp[mask]->rotated(-static_cast<long>(values[c].numerator * x % n));
      slot = slot ? *slot + term : term;
    }
  }
  return *dp.back();
}

inline bool coefficient_identity_check(const CharacterMultiset& chi) {
  return squarefree_coefficient(chi) == brute_fourier(chi, BrutePath::full_bijections);
}

// Exact n^n S^ on every permutation orbit (non-zero-sum orbits contribute 0
// and are kept so that sums over orbits are complete).
struct SpectrumEntry {
  CharacterMultiset chi = CharacterMultiset::from_parts(1, {{{0}, 1}});
  BigInt orbit = 0;
  BigInt scaled = 0;
};

struct SpectrumOptions {
  Method method = Method::recursion;
  unsigned threads = 1;
  std::optional<unsigned long> max_sparsity;
  unsigned long exhaustive_limit = 7;
  RecursionMemo* memo = nullptr;
};

inline std::vector<SpectrumEntry> spectrum(unsigned long n, const SpectrumOptions& opts = {}) {
  OrbitFilter filter;
  filter.max_sparsity = opts.max_sparsity;
  filter.exhaustive_limit = opts.exhaustive_limit;
  const auto orbits = enumerate_orbits(n, filter);
  RecursionMemo local;
  RecursionMemo& memo = opts.memo ? *opts.memo : local;
  FourierOptions fo;
  fo.method = opts.method;
  fo.memo = &memo;
  return parallel_map(orbits.size(), opts.threads, [&](std::size_t i) {
    SpectrumEntry e;
    e.chi = orbits[i];
    e.orbit = orbits[i].orbit_size();
    if (orbits[i].zero_sum()) e.scaled = *compute_fourier(orbits[i], fo).scaled;
    return e;
  });
}

// sum over characters of S^(chi)^p, from a spectrum.
inline BigRational power_sum(const std::vector<SpectrumEntry>& spec, unsigned p) {
  if (spec.empty()) return 0;
  const unsigned long n = spec.front().chi.n();
  BigInt num = 0;
  for (const auto& e : spec) {
    BigInt t;
    mpz_pow_ui(t.get_mpz_t(), e.scaled.get_mpz_t(), p);
    num += e.orbit * t;
  }
  return make_rational(num, power(n, n * p));
}

inline BigRational parseval_sum(unsigned long n, unsigned threads = 1, bool long_mode = false) {
  if (n > (long_mode ? 9u : 7u)) throw LimitExceeded("parseval_sum limited to n <= 7 (9 in long mode)");
  SpectrumOptions o;
  o.threads = threads;
  o.exhaustive_limit = 9;
  return power_sum(spectrum(n, o), 2);
}

inline BigRational cube_sum(unsigned long n, unsigned threads = 1) {
  if (n > 7) throw LimitExceeded("cube_sum limited to n <= 7");
  SpectrumOptions o;
  o.threads = threads;
  return power_sum(spectrum(n, o), 3);
}

}  // namespace triples
