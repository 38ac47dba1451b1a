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

#include <string>
#include <vector>

#include "triples/bound_report.hpp"
#include "triples/fourier.hpp"

namespace triples {

// Q(m,n) = n^{2n}/n!^2 * sum over m-sparse chi of S^(chi)^2.
struct QValue {
  unsigned long m = 0, n = 0;
  BigRational value;
};

namespace detail {
inline void check_mn(unsigned long m, unsigned long n) {
  if (n == 0 || m > n) throw UsageError("need 0 <= m <= n and n >= 1");
}
}  // namespace detail

// Inverted binomial relation: sum_k (-1)^{m-k} C(n-k, m-k) n^k / k!.
inline QValue q_exact(unsigned long m, unsigned long n) {
  detail::check_mn(m, n);
  BigRational q = 0;
  for (unsigned long k = 0; k <= m; ++k) {
    const BigRational t = make_rational(binomial(n - k, m - k) * power(n, k), factorial(k));
    q += (m - k) % 2 ? BigRational(-t) : t;
  }
  return {m, n, q};
}

// [X^m] n^{n+1} e^X / (n+X)^{n-m+1}, by multiplying the two series truncated
// at order m.
inline QValue q_series(unsigned long m, unsigned long n) {
  detail::check_mn(m, n);
  const unsigned long N = n - m + 1;
  std::vector<BigRational> ex(m + 1), inv(m + 1);
  for (unsigned long i = 0; i <= m; ++i) {
    ex[i] = make_rational(1, factorial(i));
    // (n+X)^{-N} = n^{-N} sum_j (-1)^j C(N+j-1, j) (X/n)^j
    const BigRational c = make_rational(binomial(N + i - 1, i), power(n, N + i));
    inv[i] = i % 2 ? BigRational(-c) : c;
  }
  BigRational coeff = 0;
  for (unsigned long i = 0; i <= m; ++i) coeff += ex[i] * inv[m - i];
  return {m, n, coeff * BigRational(power(n, n + 1))};
}

// a_0 = n^m, a_1 = (m-1) n^{m-1}, l a_l = ((m-l)/n) a_{l-1} + a_{l-2}/n; a_m = Q(m,n).
inline std::vector<BigRational> a_ell_sequence(unsigned long m, unsigned long n) {
  detail::check_mn(m, n);
  std::vector<BigRational> a;
  a.push_back(BigRational(power(n, m)));
  if (m == 0) return a;
  a.push_back(BigRational(BigInt(m - 1) * power(n, m - 1)));
  const BigRational inv_n = make_rational(1, n);
  for (unsigned long l = 2; l <= m; ++l) {
    BigRational next = (BigRational(m - l) * inv_n * a[l - 1] + inv_n * a[l - 2]) / BigRational(l);
    a.push_back(next);
  }
  return a;
}

// Straight from the definition over m-sparse orbits, with brute-force
// coefficients.
inline QValue q_brute(unsigned long m, unsigned long n, unsigned threads = 1, bool long_mode = false) {
  detail::check_mn(m, n);
  if (n > (long_mode ? 9u : 7u)) throw LimitExceeded("q_brute limited to n <= 7 (9 in long mode)");
  OrbitFilter f;
  f.max_sparsity = m;
  f.zero_sum_only = true;
  std::vector<CharacterMultiset> orbits;
  for_each_orbit(n, f, [&](const CharacterMultiset& chi) {
    if (chi.sparsity() == m) orbits.push_back(chi);
  });
  // n = 9 is out of reach for the bijection sum; long mode uses the recursion.
  RecursionMemo memo;
  auto terms = parallel_map(orbits.size(), threads, [&](std::size_t i) {
    const BigInt v = n <= 7 ? *brute_fourier(orbits[i]).as_integer() : recursive_scaled(orbits[i], memo);
    return BigInt(orbits[i].orbit_size() * v * v);
  });
  BigInt num = 0;
  for (const auto& t : terms) num += t;
  const BigInt f2 = factorial(n) * factorial(n);
  return {m, n, make_rational(num, f2)};
}

// sum_{k<=m} C(n-k, m-k) Q(k,n), which must equal n^m/m!.
inline BigRational recomposition(unsigned long m, unsigned long n) {
  detail::check_mn(m, n);
  BigRational s = 0;
  for (unsigned long k = 0; k <= m; ++k) s += BigRational(binomial(n - k, m - k)) * q_exact(k, n).value;
  return s;
}

inline BigRational recomposition_target(unsigned long m, unsigned long n) {
  return make_rational(power(n, m), factorial(m));
}

// Q(m,n) <= max_{s=+-1} n^{n+1} e^{sr} / (r^m (n+sr)^{n-m+1}) at r = sqrt(mn).
inline BoundReport saddle_bound_check(unsigned long m, unsigned long n, mpfr_prec_t prec = 256) {
  if (m < 1 || 2 * m > n) throw UsageError("saddle bound needs 1 <= m <= n/2");
  const BigRational q = q_exact(m, n).value;
  Real r(prec, static_cast<long>(m * n));
  r = sqrt(r);
  const Real nn(prec, static_cast<long>(n));
  const Real ln_n = log(nn);
  const Real ln_r = log(r);
  Real best = Real::infinity(-1, prec);
  for (int s : {1, -1}) {
    Real shifted = s > 0 ? nn + r : nn - r;
    Real v = Real(prec, static_cast<long>(n + 1)) * ln_n;
    v += s > 0 ? r : -r;
    v -= Real(prec, static_cast<long>(m)) * ln_r;
    v -= Real(prec, static_cast<long>(n - m + 1)) * log(shifted);
    if (v > best) best = v;
  }
  const unsigned long bin_args[] = {n, m};
  LogMagnitude half_binom = log_combinatorial(Combinatorial::binomial, bin_args, prec);
  LogMagnitude measured = LogMagnitude::of(q, prec);
  nlohmann::json detail = {{"m", m}, {"n", n}, {"Q", q.get_str()}};
  if (!measured.is_zero()) {
    Real ratio = measured.ln_abs() - half_binom.ln_abs() * Real(prec, 0.5);
    detail["ln_ratio_to_sqrt_binomial"] = ratio.to_double();
  }
  return BoundReport::make("Q(" + std::to_string(m) + "," + std::to_string(n) + ")", measured,
                           LogMagnitude::from_log(best), detail);
}

}  // namespace triples
