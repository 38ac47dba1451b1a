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
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "triples/bounds.hpp"
#include "triples/enumeration.hpp"
#include "triples/fourier.hpp"
#include "triples/major_arcs.hpp"
#include "triples/pinned.hpp"
#include "triples/sparseval.hpp"

namespace triples {

struct VerifyOptions {
  unsigned threads = 1;
  bool long_mode = false;
  PinnedConstants pins = PinnedConstants::load_default();
  double epsilon = 0.01;
  double R = 10;
  unsigned M = 12;
};

struct SuiteResult {
  std::string name;
  std::string status;  // passed | failed | skipped (...)
  nlohmann::json checks = nlohmann::json::array();
  std::size_t failures = 0;
  double elapsed_ms = 0;

  void check(const std::string& what, bool ok, nlohmann::json detail = nlohmann::json::object()) {
    checks.push_back({{"check", what}, {"pass", ok}, {"detail", std::move(detail)}});
    if (!ok) ++failures;
  }
  void reports(const std::string& what, const std::vector<BoundReport>& rs) {
    const std::size_t bad = count_failures(rs);
    nlohmann::json failed = nlohmann::json::array();
    double worst = std::numeric_limits<double>::infinity();
    for (const auto& r : rs) {
      if (!r.pass) failed.push_back(r.to_json());
      worst = std::min(worst, r.margin);
    }
    nlohmann::json d = {{"reports", rs.size()}, {"failures", bad}};
    if (!rs.empty() && std::isfinite(worst)) d["min_margin"] = worst;
    if (!failed.empty()) d["failed"] = failed;
    check(what, bad == 0, d);
  }
  nlohmann::json to_json() const {
    return {{"name", name}, {"status", status}, {"failures", failures}, {"checks", checks}};
  }
};

struct VerifyResult {
  unsigned long n = 0;
  std::vector<SuiteResult> suites;

  bool passed() const {
    for (const auto& s : suites)
      if (s.status == "failed") return false;
    return true;
  }
  std::size_t suites_passed() const {
    std::size_t k = 0;
    for (const auto& s : suites) k += s.status == "passed";
    return k;
  }
  // Deterministic part of the report: no timings.
  nlohmann::json bundle() const {
    nlohmann::json j = {{"schema", 1}, {"n", n}, {"passed", passed()}, {"suites_passed", suites_passed()}};
    auto& arr = j["suites"] = nlohmann::json::array();
    for (const auto& s : suites) arr.push_back(s.to_json());
    return j;
  }
  nlohmann::json timing() const {
    nlohmann::json t = nlohmann::json::object();
    for (const auto& s : suites) t[s.name] = s.elapsed_ms;
    return t;
  }
};

namespace detail {

inline std::string rat(const BigRational& q) { return q.get_str(); }

template <typename Body>
SuiteResult run_suite(const std::string& name, Body&& body) {
  SuiteResult s;
  s.name = name;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(s);
  } catch (const ResourceError&) {
    throw;
  } catch (const Error& e) {
    s.check("suite raised", false, {{"error", e.what()}});
  }
  s.status = s.failures ? "failed" : "passed";
  s.elapsed_ms = ms_since(t0);
  return s;
}

inline SuiteResult skipped(const std::string& name, const std::string& why) {
  SuiteResult s;
  s.name = name;
  s.status = "skipped (" + why + ")";
  return s;
}

}  // namespace detail

// Runs the six suites in order: enumeration cross-checks, Parseval and cube
// identities, sparseval routes, major arcs, pointwise and aggregate bounds,
// region decomposition.
inline VerifyResult run_verify(unsigned long n, const VerifyOptions& opts = {}) {
  if (n < 1) throw UsageError("verify needs n >= 1");
  if (n > 9 || (n > 7 && !opts.long_mode))
    throw LimitExceeded("verify runs exhaustive sweeps: n <= 7, or n <= 9 with --long");
  VerifyResult out;
  out.n = n;
  const bool odd = n % 2 == 1;
  const unsigned T = opts.threads;

  CountOptions co;
  co.threads = T;
  const CountResult counted = count_orthomorphisms(n, co);

  out.suites.push_back(detail::run_suite("enumeration", [&](SuiteResult& s) {
    s.check("s_n = n! * orthomorphisms", counted.s_n == factorial(n) * counted.orthomorphisms,
            {{"orthomorphisms", counted.orthomorphisms.get_str()}, {"s_n", counted.s_n.get_str()}});
    if (!odd) s.check("s_n = 0 for even n", counted.s_n == 0, {{"s_n", counted.s_n.get_str()}});
    if (n <= 7) {
      const BigInt direct = count_triples_direct(n, T);
      s.check("direct pair count", direct == counted.s_n, {{"direct", direct.get_str()}});
    }
    CountOptions fixed = co;
    fixed.fix_zero = true;
    const CountResult f = count_orthomorphisms(n, fixed);
    s.check("fixing pi(0) = 0 and scaling by n", f.orthomorphisms == counted.orthomorphisms);
  }));

  SpectrumOptions so;
  so.threads = T;
  so.exhaustive_limit = 9;
  RecursionMemo memo;
  so.memo = &memo;
  const std::vector<SpectrumEntry> spec = spectrum(n, so);

  out.suites.push_back(detail::run_suite("fourier-identities", [&](SuiteResult& s) {
    const BigRational triv = make_rational(factorial(n), power(n, n));
    const BigRational p2 = power_sum(spec, 2), p3 = power_sum(spec, 3);
    s.check("Parseval: sum S^2 = n!/n^n", p2 == triv, {{"sum", detail::rat(p2)}});
    s.check("n^{2n} sum S^3 = s_n", p3 * BigRational(power(n, 2 * n)) == BigRational(counted.s_n),
            {{"sum", detail::rat(p3)}});
    // brute = partition = recursion; all orbits in long mode, m <= 4 otherwise.
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < spec.size(); ++i)
      if (spec[i].chi.zero_sum() && (opts.long_mode || spec[i].chi.sparsity() <= 4)) idx.push_back(i);
    auto agree = parallel_map(idx.size(), T, [&](std::size_t j) -> int {
      const auto& e = spec[idx[j]];
      const BigInt b = *brute_fourier(e.chi).as_integer();
      const BigInt p = e.chi.sparsity() <= kMaxKillingSize ? partition_scaled(e.chi) : b;
      return b == p && b == e.scaled ? 1 : 0;
    });
    std::size_t bad = 0;
    for (int a : agree) bad += a ? 0 : 1;
    s.check("brute = partition = recursion", bad == 0, {{"orbits", idx.size()}, {"disagreements", bad}});
    std::size_t shift_bad = 0, bound_bad = 0;
    const BigInt fact = factorial(n);
    for (const auto& e : spec) {
      if (abs(e.scaled) > fact) ++bound_bad;
      if (!e.chi.zero_sum() && e.scaled != 0) ++shift_bad;
      if (e.chi.zero_sum()) {
        const auto sh = e.chi.shifted({1});
        if (*compute_fourier(sh).scaled != shift_sign(n, {1}) * e.scaled) ++shift_bad;
      }
    }
    s.check("shift invariance and vanishing off the zero-sum hyperplane", shift_bad == 0);
    s.check("trivial bound |S^| <= n!/n^n", bound_bad == 0);
  }));

  out.suites.push_back(detail::run_suite("sparseval", [&](SuiteResult& s) {
    std::size_t route_bad = 0, recomposition_bad = 0, brute_bad = 0;
    for (unsigned long m = 0; m <= n; ++m) {
      const BigRational q = q_exact(m, n).value;
      if (q != q_series(m, n).value || q != a_ell_sequence(m, n).back()) ++route_bad;
      if (recomposition(m, n) != recomposition_target(m, n)) ++recomposition_bad;
      if (q != q_brute(m, n, T, opts.long_mode).value) ++brute_bad;
    }
    s.check("exact = series = recurrence", route_bad == 0);
    s.check("binomial recomposition", recomposition_bad == 0);
    s.check("routes = definition over m-sparse orbits", brute_bad == 0);
    if (n >= 2) {
      std::vector<BoundReport> rs;
      for (unsigned long m = 1; 2 * m <= n; ++m) rs.push_back(saddle_bound_check(m, n));
      s.reports("saddle-point bound", rs);
    }
  }));

  if (!odd) {
    for (const char* name : {"major-arcs", "bounds", "regions"}) out.suites.push_back(detail::skipped(name, "even n"));
    return out;
  }

  out.suites.push_back(detail::run_suite("major-arcs", [&](SuiteResult& s) {
    if (n >= 3) {
      const BigRational ratio = msparse_cube_sum(2, n, T) / trivial_cube_exact(n);
      s.check("2-sparse cube sum = -(1/2) n/(n-1) n!^3/n^{3n}", ratio == make_rational(-BigInt(n), BigInt(2 * (n - 1))),
              {{"ratio", detail::rat(ratio)}});
    }
    std::vector<BoundReport> parts;
    for (const auto& e : spec)
      if (e.chi.sparsity() <= 4) parts.push_back(max_parts_bound_check(e.chi));
    s.reports("max-parts bound", parts);
    std::vector<BoundReport> pairs;
    for (unsigned m = 2; m <= 8 && m < n; m += 2) pairs.push_back(pairing_term_check(standard_pairing(m, n), opts.pins));
    s.reports("pairing term", pairs);
    std::vector<BoundReport> parity;
    for (unsigned m = 1; m <= n; m += 2)
      if (opts.pins.odd_parity.count(m)) parity.push_back(odd_parity_check(m, n, opts.pins, T));
    s.reports("odd-m cube sums", parity);
    const double ss = singular_series(opts.M).to_double();
    s.check("singular series", std::abs(ss - std::exp(-0.5)) <= (opts.M >= 12 ? 1e-9 : 1.0),
            {{"M", opts.M}, {"value", ss}});
  }));

  out.suites.push_back(detail::run_suite("bounds", [&](SuiteResult& s) {
    s.reports("entropy bound", entropy_bound_check(spec));
    s.reports("SRH bound", srh_bound_check(spec));
    std::vector<BoundReport> tails;
    for (double R : {1.0, 2.0, 3.0, 10.0}) tails.push_back(tail_bound_check(spec, R));
    s.reports("tail bound", tails);
    if (n >= 2) s.reports("U_m domination", um_domination_check(spec, um_solve(n, static_cast<unsigned>(n))));
    s.reports("matrix identities", matrix_identities_sweep(200));
    s.reports("pinned L-infinity ratio", linfty_ratio_report(spec, opts.pins.linfty_c));
  }));

  out.suites.push_back(detail::run_suite("regions", [&](SuiteResult& s) {
    const BigRational total = power_sum(spec, 3);
    for (double eps : {opts.epsilon, 0.3}) {
      for (double R : {opts.R, 3.0}) {
        if (!(eps < R)) continue;
        const RegionDecomposition r = region_decomposition(spec, eps, R, opts.M);
        s.check("low + medium + high = cube sum (eps=" + std::to_string(eps) + ", R=" + std::to_string(R) + ")",
                r.total() == total, r.to_json());
      }
    }
  }));
  return out;
}

}  // namespace triples
