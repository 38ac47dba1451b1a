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
#include <cmath>
#include <string>
#include <vector>

#include "triples/bound_report.hpp"
#include "triples/fourier.hpp"
#include "triples/major_arcs.hpp"
#include "triples/pinned.hpp"

namespace triples {

namespace detail {

inline LogMagnitude scaled_to_log(const BigInt& v, unsigned long n) {
  return LogMagnitude::of(abs(v)) / LogMagnitude::of(power(n, n));
}

inline const std::vector<SpectrumEntry>& need_spectrum(const std::vector<SpectrumEntry>& spec) {
  if (spec.empty()) throw UsageError("empty spectrum");
  return spec;
}

}  // namespace detail

// |S^| <= multinomial^{-1/2} (n!/n^n)^{1/2}, i.e. V^2 multinomial <= n! n^n for
// V = n^n S^.
inline std::vector<BoundReport> entropy_bound_check(const std::vector<SpectrumEntry>& spec) {
  const unsigned long n = detail::need_spectrum(spec).front().chi.n();
  const BigInt rhs = factorial(n) * power(n, n);
  std::vector<BoundReport> out;
  for (const auto& e : spec) {
    const BigInt lhs = e.scaled * e.scaled * e.orbit;
    // bound on |S^|: sqrt(n! n^n / multinomial) / n^n
    LogMagnitude bound = LogMagnitude::from_log(
        (LogMagnitude::of(rhs).ln_abs() - LogMagnitude::of(e.orbit).ln_abs()) * Real(256, 0.5));
    bound = bound / LogMagnitude::of(power(n, n));
    out.push_back(BoundReport::make_exact(e.chi.to_string(), detail::scaled_to_log(e.scaled, n), bound, lhs <= rhs));
  }
  return out;
}

// Stronger bound: |S^| <= C(n+k-1, k-1)^{1/2} multinomial^{-1/2} n!/n^n,
// i.e. V^2 multinomial <= C(n+k-1,k-1) n!^2.
inline std::vector<BoundReport> srh_bound_check(const std::vector<SpectrumEntry>& spec) {
  const unsigned long n = detail::need_spectrum(spec).front().chi.n();
  const BigInt f2 = factorial(n) * factorial(n);
  std::vector<BoundReport> out;
  for (const auto& e : spec) {
    const unsigned long k = e.chi.distinct();
    const BigInt rhs = binomial(n + k - 1, k - 1) * f2;
    const BigInt lhs = e.scaled * e.scaled * e.orbit;
    LogMagnitude bound = LogMagnitude::from_log(
        (LogMagnitude::of(rhs).ln_abs() - LogMagnitude::of(e.orbit).ln_abs()) * Real(256, 0.5));
    bound = bound / LogMagnitude::of(power(n, n));
    out.push_back(BoundReport::make_exact(e.chi.to_string(), detail::scaled_to_log(e.scaled, n), bound, lhs <= rhs,
                                          {{"k", k}}));
  }
  return out;
}

// sum_{H(chi) >= R} |S^|^3 <= e^{(3-R)n/2} (n!/n^n)^3.
inline BoundReport tail_bound_check(const std::vector<SpectrumEntry>& spec, double R) {
  const unsigned long n = detail::need_spectrum(spec).front().chi.n();
  BigInt num = 0;
  std::size_t orbits = 0;
  for (const auto& e : spec) {
    if (e.chi.entropy() < R) continue;
    ++orbits;
    num += e.orbit * abs(e.scaled * e.scaled * e.scaled);
  }
  const BigRational measured = make_rational(num, power(n, 3 * n));
  LogMagnitude bound = LogMagnitude::from_log(Real(256, (3.0 - R) * static_cast<double>(n) / 2.0)) * trivial_cube(n);
  return BoundReport::make("tail n=" + std::to_string(n) + " R=" + std::to_string(R), LogMagnitude::of(measured),
                           bound, {{"orbits", orbits}, {"R", R}});
}

// U_1 = 0, U_2 = n!/((n-1) n^n),
// U_m = max{(m-1) U_{m-1}, (m/2) U_{m-2} + (m/2-1) U_{m-1}} / (n-m+1).
struct UmTable {
  unsigned long n = 0;
  std::vector<BigRational> U;  // U[0] unused, U[m] for 1 <= m <= M

  const BigRational& at(unsigned m) const { return U.at(m); }
  unsigned M() const { return static_cast<unsigned>(U.size()) - 1; }
};

inline UmTable um_solve(unsigned long n, unsigned M) {
  if (M < 2 || M > n) throw UsageError("um_solve needs 2 <= M <= n");
  UmTable t;
  t.n = n;
  t.U.assign(M + 1, BigRational(0));
  t.U[2] = make_rational(factorial(n), BigInt(n - 1) * power(n, n));
  for (unsigned m = 3; m <= M; ++m) {
    const BigRational a = BigRational(m - 1) * t.U[m - 1];
    const BigRational b = make_rational(m, 2) * t.U[m - 2] + (make_rational(m, 2) - 1) * t.U[m - 1];
    t.U[m] = std::max(a, b) / BigRational(n - m + 1);
  }
  return t;
}

// max over m-sparse orbits of |S^| against U_m, for every m <= M.
inline std::vector<BoundReport> um_domination_check(const std::vector<SpectrumEntry>& spec, const UmTable& table) {
  const unsigned long n = detail::need_spectrum(spec).front().chi.n();
  std::vector<BigInt> best(table.M() + 1, BigInt(0));
  for (const auto& e : spec) {
    const unsigned long m = e.chi.sparsity();
    if (m >= 1 && m <= table.M()) best[m] = std::max(best[m], abs(e.scaled));
  }
  std::vector<BoundReport> out;
  for (unsigned m = 1; m <= table.M(); ++m) {
    const BigRational measured = make_rational(best[m], power(n, n));
    out.push_back(BoundReport::make_exact("U_" + std::to_string(m) + " n=" + std::to_string(n),
                                          LogMagnitude::of(measured), LogMagnitude::of(table.at(m)),
                                          measured <= table.at(m),
                                          {{"U", table.at(m).get_str()}, {"max", measured.get_str()},
                                           {"tight", measured == table.at(m)}}));
  }
  return out;
}

// alpha_m = m/(2(n-m+1)), beta_m = (m-2)/(2(n-m+1)), gamma_m = (m-1)/(n-m+1),
// N_m = [[beta_m/sqrt(alpha_m), sqrt(alpha_m/alpha_{m-1})], [1, 0]]. The
// entries of N^T N are rational after squaring the off-diagonal term.
inline BoundReport matrix_identities_check(unsigned long m, unsigned long n) {
  if (m < 3 || 3 * m > n) throw UsageError("matrix identities need 3 <= m <= n/3");
  auto alpha = [&](unsigned long k) { return make_rational(k, 2 * (n - k + 1)); };
  const BigRational a = alpha(m), a1 = alpha(m - 1);
  const BigRational beta = make_rational(m - 2, 2 * (n - m + 1));
  const BigRational gamma = make_rational(m - 1, n - m + 1);
  const BigRational g11 = beta * beta / a + 1;    // (beta/sqrt a)^2 + 1
  const BigRational g22 = a / a1;                 // sqrt(a/a1)^2
  const BigRational g12_sq = beta * beta / a1;    // (beta/sqrt a * sqrt(a/a1))^2
  const BigRational det = g11 * g22 - g12_sq;
  const BigRational trace = g11 + g22;
  const bool det_ok = det == a / a1;
  const bool trace_ok = trace == beta * beta / a + a / a1 + 1;
  const BigRational gamma_ratio = gamma * gamma / a, beta_ratio = beta * beta / a;
  const bool gamma_ok = gamma_ratio <= make_rational(4 * m, n);
  const bool beta_ok = beta_ratio <= make_rational(m, n);
  return BoundReport::make_exact(
      "matrix m=" + std::to_string(m) + " n=" + std::to_string(n), LogMagnitude::of(gamma_ratio),
      LogMagnitude::of(make_rational(4 * m, n)), det_ok && trace_ok && gamma_ok && beta_ok,
      {{"det", det.get_str()}, {"trace", trace.get_str()}, {"det_ok", det_ok}, {"trace_ok", trace_ok},
       {"gamma_sq_over_alpha", gamma_ratio.get_str()}, {"beta_sq_over_alpha", beta_ratio.get_str()},
       {"gamma_ok", gamma_ok}, {"beta_ok", beta_ok}});
}

inline std::vector<BoundReport> matrix_identities_sweep(unsigned long n_max) {
  std::vector<BoundReport> out;
  for (unsigned long n = 9; n <= n_max; ++n)
    for (unsigned long m = 3; 3 * m <= n; ++m) out.push_back(matrix_identities_check(m, n));
  return out;
}

// rho = ln(|S^| 2^{m/2} C(n,m)^{1/2} n^n/n!).
inline Real linfty_rho(const BigInt& scaled, unsigned long m, unsigned long n, mpfr_prec_t prec = 256) {
  if (scaled == 0) return Real::infinity(-1, prec);
  Real rho = log_abs(scaled, prec);
  rho += Real(prec, static_cast<double>(m) / 2) * log(Real(prec, 2L));
  rho += log_abs(binomial(n, m), prec) * Real(prec, 0.5);
  rho -= log_abs(factorial(n), prec);
  return rho;
}

inline double linfty_shape(unsigned long m, unsigned long n) {
  const double dm = static_cast<double>(m);
  return std::pow(dm, 1.5) / std::sqrt(static_cast<double>(n)) + std::sqrt(dm);
}

// rho(chi) <= c (m^{3/2}/n^{1/2} + m^{1/2}) for every orbit with 1 <= m <= 2n/3.
inline std::vector<BoundReport> linfty_ratio_report(const std::vector<SpectrumEntry>& spec, double c) {
  const unsigned long n = detail::need_spectrum(spec).front().chi.n();
  std::vector<BoundReport> out;
  for (const auto& e : spec) {
    const unsigned long m = e.chi.sparsity();
    if (m < 1 || 3 * m > 2 * n) continue;
    const Real rho = linfty_rho(e.scaled, m, n);
    const double allowed = c * linfty_shape(m, n);
    nlohmann::json d = {{"m", m}, {"rho", rho.is_finite() ? nlohmann::json(rho.to_double()) : "-inf"},
                        {"allowed", allowed}};
    out.push_back(BoundReport::make(e.chi.to_string(),
                                    rho.is_finite() ? LogMagnitude::from_log(rho) : LogMagnitude(),
                                    LogMagnitude::from_log(Real(256, allowed)), d));
  }
  return out;
}

// Exact number of characters (not orbits) per half-open entropy bucket
// [t_i, t_{i+1}), with t_0 = 0 and a final unbounded bucket.
struct CensusBucket {
  double lo = 0, hi = 0;  // hi = inf for the last bucket
  BigInt count = 0;
};

inline std::vector<CensusBucket> entropy_census(unsigned long n, std::vector<double> thresholds) {
  if (n > 9) throw LimitExceeded("entropy census limited to n <= 9");
  std::sort(thresholds.begin(), thresholds.end());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());
  std::vector<CensusBucket> buckets;
  double lo = 0;
  for (double t : thresholds) {
    if (t <= 0) continue;
    buckets.push_back({lo, t, 0});
    lo = t;
  }
  buckets.push_back({lo, std::numeric_limits<double>::infinity(), 0});
  OrbitFilter f;
  f.exhaustive_limit = 9;
  for_each_orbit(n, f, [&](const CharacterMultiset& chi) {
    const double h = chi.entropy();
    for (auto& b : buckets)
      if (h >= b.lo && h < b.hi) {
        b.count += chi.orbit_size();
        break;
      }
  });
  return buckets;
}

// Number of characters with H <= h.
inline BigInt census_at_most(unsigned long n, double h) {
  OrbitFilter f;
  f.exhaustive_limit = 9;
  BigInt total = 0;
  for_each_orbit(n, f, [&](const CharacterMultiset& chi) {
    if (chi.entropy() <= h) total += chi.orbit_size();
  });
  return total;
}

// Cube sum split by entropy: low H <= eps, medium eps < H <= R, high H > R.
struct RegionDecomposition {
  unsigned long n = 0;
  double epsilon = 0, R = 0;
  BigRational low, medium, high;
  std::size_t low_orbits = 0, medium_orbits = 0, high_orbits = 0;
  BigRational main_terms;  // sum_{m <= M} coefficient_m n!^3/n^{3n}
  unsigned M = 0;

  BigRational total() const { return low + medium + high; }

  nlohmann::json to_json() const {
    return {{"n", n}, {"epsilon", epsilon}, {"R", R},
            {"low", low.get_str()}, {"medium", medium.get_str()}, {"high", high.get_str()},
            {"orbits", {{"low", low_orbits}, {"medium", medium_orbits}, {"high", high_orbits}}},
            {"total", total().get_str()}, {"M", M}, {"main_terms", main_terms.get_str()},
            {"low_over_main", main_terms == 0 ? nlohmann::json(nullptr) : nlohmann::json(BigRational(low / main_terms).get_d())}};
  }
};

inline RegionDecomposition region_decomposition(const std::vector<SpectrumEntry>& spec, double epsilon, double R,
                                                unsigned M = 12) {
  if (!(epsilon > 0 && epsilon < R)) throw UsageError("region decomposition needs 0 < epsilon < R");
  const unsigned long n = detail::need_spectrum(spec).front().chi.n();
  RegionDecomposition r;
  r.n = n;
  r.epsilon = epsilon;
  r.R = R;
  r.M = M;
  BigInt low = 0, medium = 0, high = 0;
  for (const auto& e : spec) {
    const double h = e.chi.entropy();
    const BigInt t = e.orbit * e.scaled * e.scaled * e.scaled;
    if (h <= epsilon) {
      low += t;
      ++r.low_orbits;
    } else if (h <= R) {
      medium += t;
      ++r.medium_orbits;
    } else {
      high += t;
      ++r.high_orbits;
    }
  }
  const BigInt den = power(n, 3 * n);
  r.low = make_rational(low, den);
  r.medium = make_rational(medium, den);
  r.high = make_rational(high, den);
  BigRational coeff = 0;
  for (unsigned m = 0; m <= M; ++m) coeff += main_term_coefficient(m);
  r.main_terms = coeff * trivial_cube_exact(n);
  return r;
}

}  // namespace triples
