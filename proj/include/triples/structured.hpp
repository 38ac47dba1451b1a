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
#include <chrono>
#include <numeric>
#include <utility>
#include <vector>

#include "triples/fourier_value.hpp"
#include "triples/parallel.hpp"

namespace triples {

// chi = (r_1^{a_1}, ..., r_k^{a_k}) with every r_i in (1/d)Z/Z. Residue class j
// mod d holds n/d elements and each contributes the linear form
// sum_i w^{-b_i j} z_i (w = e(1/d)), so
//
//   n^n S^(chi) = prod a_i! * [prod z_i^{a_i}] prod_j (sum_i w^{-b_i j} z_i)^{n/d}.
//
// The form is homogeneous of degree n, so the class with the largest a_i is
// pinned to z = 1 and the coefficient is read off in the other k-1 variables.
struct StructuredShape {
  unsigned long n = 0;
  unsigned long d = 1;
  std::vector<unsigned long> b;  // numerators over d
  std::vector<unsigned> a;
  std::size_t ref = 0;           // pinned class
};

inline constexpr std::size_t kMaxStructuredClasses = 6;

inline StructuredShape structured_shape(const CharacterMultiset& chi) {
  StructuredShape s;
  s.n = chi.n();
  unsigned long g = s.n;
  for (const auto& p : chi.parts()) g = std::gcd(g, p.value.numerator);
  s.d = s.n / g;
  for (const auto& p : chi.parts()) {
    s.b.push_back(p.value.numerator / g);
    s.a.push_back(p.multiplicity);
  }
  if (s.a.size() > kMaxStructuredClasses)
    throw LimitExceeded("structured engine handles at most 6 distinct values");
  s.ref = static_cast<std::size_t>(std::max_element(s.a.begin(), s.a.end()) - s.a.begin());
  return s;
}

namespace detail {

inline BigInt class_factorials(const StructuredShape& s) {
  BigInt f = 1;
  for (unsigned a : s.a) f *= factorial(a);
  return f;
}

inline double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace detail

// Exact box-truncated convolution over Z[w_d]. Each cell holds d integer
// coefficients of powers of w.
inline FourierValue structured_dp(const CharacterMultiset& chi) {
  const auto t0 = std::chrono::steady_clock::now();
  const StructuredShape s = structured_shape(chi);
  if (s.a.size() > 3) throw LimitExceeded("structured dp handles at most 3 distinct values");
  if (s.n > 400) throw LimitExceeded("structured dp limited to n <= 400");
  const unsigned long d = s.d;
  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < s.a.size(); ++i)
    if (i != s.ref) others.push_back(i);
  // Row-major box [0, a_o] over the free classes.
  std::vector<std::size_t> stride(others.size());
  std::size_t cells = 1;
  for (std::size_t o = others.size(); o-- > 0;) {
    stride[o] = cells;
    cells *= s.a[others[o]] + 1;
  }
  std::vector<BigInt> cur(cells * d), next(cells * d);
  cur[0] = 1;
  std::vector<unsigned> idx(others.size());
  for (unsigned long j = 0; j < d; ++j) {
    auto phase = [&](std::size_t cls) { return (d - (s.b[cls] * j) % d) % d; };
    const unsigned long ref_shift = phase(s.ref);
    for (unsigned long rep = 0; rep < s.n / d; ++rep) {
      for (auto& x : next) x = 0;
      std::fill(idx.begin(), idx.end(), 0u);
      for (std::size_t c = 0; c < cells; ++c) {
        BigInt* dst = &next[c * d];
        const BigInt* src = &cur[c * d];
        for (unsigned long t = 0; t < d; ++t)
          if (src[t] != 0) dst[(t + ref_shift) % d] += src[t];
        for (std::size_t o = 0; o < others.size(); ++o) {
          if (idx[o] == 0) continue;
          const BigInt* lower = &cur[(c - stride[o]) * d];
          const unsigned long sh = phase(others[o]);
          for (unsigned long t = 0; t < d; ++t)
            if (lower[t] != 0) dst[(t + sh) % d] += lower[t];
        }
        for (std::size_t o = others.size(); o-- > 0;) {
          if (++idx[o] <= s.a[others[o]]) break;
          idx[o] = 0;
        }
      }
      std::swap(cur, next);
    }
  }
  CyclotomicValue v(d);
  const BigInt scale = detail::class_factorials(s);
  for (unsigned long t = 0; t < d; ++t) v.add_root_multiple(static_cast<long>(t), cur[(cells - 1) * d + t] * scale);
  FourierValue out;
  out.chi = chi;
  out.method = Method::structured_dp;
  out.scaled = v.as_integer();
  if (!out.scaled) throw Error("structured dp produced a non-rational coefficient for " + chi.to_string());
  out.exact = std::move(v);
  out.elapsed_ms = detail::ms_since(t0);
  return out;
}

struct DftOptions {
  mpfr_prec_t precision = 256;
  mpfr_prec_t ceiling = 32768;
  double tolerance = 1e-30;
  unsigned threads = 1;
};

namespace detail {

inline constexpr unsigned long kMaxRootTable = 1ul << 22;

// Ball for prod a_i! * (coefficient) at one precision.
inline TrackedComplex structured_dft_once(const StructuredShape& s, mpfr_prec_t prec, unsigned threads) {
  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < s.a.size(); ++i)
    if (i != s.ref) others.push_back(i);
  const std::size_t dims = others.size();
  // Grid of side L = a_ref + 1: an aliased exponent a_o + tL would force the
  // pinned class below zero, so the average picks out exactly one coefficient.
  const unsigned long L = s.a[s.ref] + 1ul;
  const unsigned long D = std::lcm(s.d, L);
  if (D > kMaxRootTable) throw LimitExceeded("structured dft root table too large");
  std::vector<TrackedComplex> roots;
  roots.reserve(D);
  for (unsigned long t = 0; t < D; ++t) roots.push_back(TrackedComplex::root_of_unity(static_cast<long>(t), D, prec));
  const unsigned long per_class = s.n / s.d;
  const unsigned long dD = D / s.d, lD = D / L;

  std::size_t points = 1;
  for (std::size_t o = 0; o < dims; ++o) points *= L;
  const std::size_t rows = dims == 0 ? 1 : L;
  const std::size_t row_len = points / rows;

  // F(z^bar) = conj F(z), so each conjugate pair is summed once.
  auto row_sum = [&](std::size_t row) {
    TrackedComplex self(prec), pair(prec);
    std::vector<unsigned long> t(dims);
    for (std::size_t r = 0; r < row_len; ++r) {
      std::size_t lin = row * row_len + r, rest = lin, conj_lin = 0;
      for (std::size_t o = dims; o-- > 0;) {
        t[o] = rest % L;
        rest /= L;
      }
      for (std::size_t o = 0; o < dims; ++o) conj_lin = conj_lin * L + (L - t[o]) % L;
      if (conj_lin < lin) continue;
      TrackedComplex term = TrackedComplex::from_integer(1, prec);
      for (unsigned long j = 0; j < s.d; ++j) {
        auto coeff = [&](std::size_t cls) { return (D - (s.b[cls] * j % s.d) * dD % D) % D; };
        TrackedComplex form = roots[coeff(s.ref)];
        for (std::size_t o = 0; o < dims; ++o) form += roots[(coeff(others[o]) + t[o] * lD) % D];
        term = term * form.pow(per_class);
      }
      unsigned long twist = 0;
      for (std::size_t o = 0; o < dims; ++o) twist = (twist + s.a[others[o]] % L * t[o]) % L;
      term = term * roots[(D - twist * lD % D) % D];
      if (conj_lin == lin) {
        self += term;
      } else {
        pair += term;
      }
    }
    return std::pair<TrackedComplex, TrackedComplex>(std::move(self), std::move(pair));
  };
  auto partial = parallel_map(rows, threads, row_sum);
  TrackedComplex total(prec);
  for (auto& [self, pair] : partial) {
    total += self;
    total += pair;
    total += pair.conj();
  }
  total /= power(L, dims);
  total *= class_factorials(s);
  return total;
}

// The unique integer in a real ball of radius < 1/2, if any.
inline std::optional<BigInt> integer_in_ball(const TrackedComplex& z) {
  if (!z.err().is_finite() || z.err().to_double() >= 0.5) return std::nullopt;
  Real r = z.re();
  mpfr_round(r.raw(), r.raw());
  BigInt k;
  mpfr_get_z(k.get_mpz_t(), r.raw(), MPFR_RNDN);
  if (!z.contains(BigRational(k), 0)) return std::nullopt;
  return k;
}

}  // namespace detail

// Ball evaluation by averaging over a grid of roots of unity, doubling the
// precision until the relative radius meets the tolerance. Since n^n S^ is an
// integer, a radius below 1/2 also pins the exact value.
inline FourierValue structured_dft(const CharacterMultiset& chi, const DftOptions& opts = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  if (opts.precision < 64) throw UsageError("precision must be at least 64 bits");
  const StructuredShape s = structured_shape(chi);
  FourierValue out;
  out.chi = chi;
  out.method = Method::structured_dft;
  for (mpfr_prec_t prec = opts.precision;; prec *= 2) {
    TrackedComplex z = detail::structured_dft_once(s, prec, opts.threads);
    auto k = detail::integer_in_ball(z);
    const double rel = z.relative_error();
    const bool ok = k.has_value() || rel <= opts.tolerance;
    out.escalation.push_back({prec, rel, ok});
    if (ok) {
      out.scaled = k;
      out.approx = std::move(z);
      break;
    }
    if (prec * 2 > opts.ceiling)
      throw PrecisionExhausted("structured dft for " + chi.to_string() + " missed tolerance at " +
                               std::to_string(prec) + " bits (ceiling " + std::to_string(opts.ceiling) + ")");
  }
  out.elapsed_ms = detail::ms_since(t0);
  return out;
}

}  // namespace triples
