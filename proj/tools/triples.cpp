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

// Command-line front end. Exit codes: 0 ok, 1 a check failed, 2 bad usage,
// 3 out of resources or precision.

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "triples.hpp"

namespace {

using namespace triples;
using nlohmann::json;

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kResource = 3 };

struct Common {
  std::string format = "json";
  std::string out;
  unsigned threads = default_threads();
  std::string config;
};

// A JSON document plus, optionally, the same data as a flat table for csv/text.
struct Output {
  json doc;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> notes;  // extra lines for text output
};

std::string fmt_double(double x, int digits = 12) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  std::ostringstream s;
  s << std::setprecision(digits) << x;
  return s.str();
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

void emit(const Output& o, const Common& c) {
  std::ostringstream s;
  if (c.format == "json") {
    s << o.doc.dump(2) << '\n';
  } else if (c.format == "csv") {
    if (o.header.empty()) throw UsageError("this command has no tabular output; use --format json");
    for (std::size_t i = 0; i < o.header.size(); ++i) s << (i ? "," : "") << csv_cell(o.header[i]);
    s << '\n';
    for (const auto& r : o.rows) {
      for (std::size_t i = 0; i < r.size(); ++i) s << (i ? "," : "") << csv_cell(r[i]);
      s << '\n';
    }
  } else if (c.format == "text") {
    if (o.header.empty()) {
      s << o.doc.dump(2) << '\n';
    } else {
      std::vector<std::size_t> w(o.header.size());
      for (std::size_t i = 0; i < w.size(); ++i) w[i] = o.header[i].size();
      for (const auto& r : o.rows)
        for (std::size_t i = 0; i < r.size() && i < w.size(); ++i) w[i] = std::max(w[i], r[i].size());
      auto line = [&](const std::vector<std::string>& r) {
        for (std::size_t i = 0; i < r.size(); ++i) s << (i ? "  " : "") << std::setw(static_cast<int>(w[i])) << r[i];
        s << '\n';
      };
      line(o.header);
      for (const auto& r : o.rows) line(r);
    }
    for (const auto& n : o.notes) s << n << '\n';
  } else {
    throw UsageError("unknown format '" + c.format + "' (json|csv|text)");
  }
  if (c.out.empty()) {
    std::cout << s.str();
  } else {
    std::ofstream f(c.out);
    if (!f) throw ResourceError("cannot write " + c.out);
    f << s.str();
  }
}

PinnedConstants load_pins(const Common& c) {
  return c.config.empty() ? PinnedConstants::load_default() : PinnedConstants::load(c.config);
}

// "a:b:s" (step defaults to 2) or a single value.
std::vector<unsigned long> parse_range(const std::string& text) {
  std::vector<long> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) {
    try {
      std::size_t pos = 0;
      v.push_back(std::stol(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("malformed range '" + text + "' (expected a:b:s)");
    }
  }
  if (v.empty() || v.size() > 3) throw UsageError("malformed range '" + text + "' (expected a:b:s)");
  const long a = v[0], b = v.size() > 1 ? v[1] : v[0], s = v.size() > 2 ? v[2] : 2;
  if (a < 1 || b < a || s < 1) throw UsageError("range needs 1 <= a <= b and s >= 1");
  std::vector<unsigned long> out;
  for (long n = a; n <= b; n += s) out.push_back(static_cast<unsigned long>(n));
  return out;
}

std::vector<unsigned long> n_values(unsigned long n, const std::string& range) {
  if (!range.empty()) return parse_range(range);
  if (n == 0) throw UsageError("give --n or --n-range");
  return {n};
}

void require_odd(unsigned long n, const std::string& what) {
  if (n % 2 == 0) throw EvenOrderError(what + " needs odd n (got " + std::to_string(n) + "); s_n = 0 for even n");
}

void add_common(CLI::App* sub, Common& c, bool threads = true) {
  sub->add_option("--format", c.format, "json|csv|text")->check(CLI::IsMember({"json", "csv", "text"}));
  sub->add_option("--out", c.out, "write output to this path");
  if (threads) sub->add_option("--threads", c.threads, "worker threads (results do not depend on this)");
  sub->add_option("--config", c.config, "pinned-constants file");
}

// ---------------------------------------------------------------- count

struct CountArgs {
  unsigned long n = 0;
  std::string mode = "backtrack";
  std::string group;
  bool fix_zero = false;
};

int run_count(const CountArgs& a, const Common& c) {
  Output o;
  if (!a.group.empty()) {
    const GroupSpec g = GroupSpec::parse(a.group);
    const auto t0 = std::chrono::steady_clock::now();
    const BigInt s = a.mode == "direct" ? count_general_group_direct(g) : count_general_group(g, c.threads);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    BigInt ortho = s / factorial(g.size());
    o.doc = {{"group", g.to_string()}, {"order", g.size()}, {"orthomorphisms", ortho.get_str()},
             {"s_G", s.get_str()}, {"elapsed_ms", ms}};
    o.header = {"group", "order", "orthomorphisms", "s_G"};
    o.rows.push_back({g.to_string(), std::to_string(g.size()), ortho.get_str(), s.get_str()});
    emit(o, c);
    return kOk;
  }
  if (a.n == 0) throw UsageError("count needs --n or --group");
  CountResult r;
  if (a.mode == "direct") {
    const auto t0 = std::chrono::steady_clock::now();
    r.n = a.n;
    r.s_n = count_triples_direct(a.n, c.threads);
    r.orthomorphisms = r.s_n / factorial(a.n);
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  } else if (a.mode == "backtrack") {
    CountOptions co;
    co.threads = c.threads;
    co.fix_zero = a.fix_zero;
    r = count_orthomorphisms(a.n, co);
  } else {
    throw UsageError("unknown mode '" + a.mode + "' (backtrack|direct)");
  }
  o.doc = {{"n", r.n}, {"orthomorphisms", r.orthomorphisms.get_str()}, {"s_n", r.s_n.get_str()},
           {"elapsed_ms", r.elapsed_ms}};
  o.header = {"n", "orthomorphisms", "s_n"};
  o.rows.push_back({std::to_string(r.n), r.orthomorphisms.get_str(), r.s_n.get_str()});
  emit(o, c);
  return kOk;
}

// ---------------------------------------------------------------- fourier

struct FourierArgs {
  std::string chi;
  std::string method = "auto";
  long precision = 256;
  long ceiling = 32768;
  double tolerance = 1e-30;
  std::string cache;
};

int run_fourier(const FourierArgs& a, const Common& c) {
  const CharacterMultiset chi = parse_character(a.chi);
  if (a.precision < 64) throw UsageError("--precision must be at least 64");
  std::unique_ptr<CoefficientCache> cache;
  if (!a.cache.empty()) {
    std::filesystem::path p = a.cache;
    if (std::filesystem::is_directory(p) || p.extension() != ".tsv") p = CoefficientCache::default_path(chi.n(), a.cache);
    cache = std::make_unique<CoefficientCache>(p, chi.n());
  } else if (std::getenv(CoefficientCache::kEnvDir)) {
    cache = std::make_unique<CoefficientCache>(CoefficientCache::default_path(chi.n()), chi.n());
  }
  const std::string key = chi.to_string();
  FourierValue v;
  bool cached = false;
  if (cache) {
    if (auto hit = cache->get(key)) {
      v.chi = chi;
      v.method = parse_method(a.method);
      v.scaled = *hit;
      cached = true;
    }
  }
  if (!cached) {
    RecursionMemo memo(5'000'000, cache.get());
    FourierOptions fo;
    fo.method = parse_method(a.method);
    fo.dft.precision = a.precision;
    fo.dft.ceiling = a.ceiling;
    fo.dft.tolerance = a.tolerance;
    fo.dft.threads = c.threads;
    fo.memo = &memo;
    v = compute_fourier(chi, fo);
    if (cache && v.scaled) cache->put(key, method_name(v.method), *v.scaled);
  }
  Output o;
  o.doc = v.to_json();
  o.doc["cached"] = cached;
  if (cache) o.doc["cache_file"] = cache->path().string();
  o.header = {"character", "method", "scaled", "ln_abs", "ln_ratio"};
  o.rows.push_back({key, method_name(v.method), v.scaled ? v.scaled->get_str() : "",
                    v.log_abs().ln_abs().to_string(15), v.log_ratio().ln_abs().to_string(15)});
  emit(o, c);
  return kOk;
}

// ---------------------------------------------------------------- sparseval

struct SparsevalArgs {
  unsigned long n = 0;
  long m = -1;
  bool all_m = false;
  std::string routes = "exact,series,recurrence";
  bool check_bound = false;
  bool long_mode = false;
};

int run_sparseval(const SparsevalArgs& a, const Common& c) {
  if (a.n == 0) throw UsageError("sparseval needs --n");
  std::vector<std::string> routes;
  {
    std::stringstream ss(a.routes);
    std::string r;
    while (std::getline(ss, r, ',')) {
      if (r != "exact" && r != "series" && r != "recurrence" && r != "brute")
        throw UsageError("unknown route '" + r + "' (exact,series,recurrence,brute)");
      routes.push_back(r);
    }
  }
  std::vector<unsigned long> ms;
  if (a.m >= 0 && !a.all_m) {
    ms.push_back(static_cast<unsigned long>(a.m));
  } else {
    for (unsigned long m = 0; m <= a.n; ++m) ms.push_back(m);
  }
  Output o;
  o.header = {"m", "n", "Q", "Q_decimal", "routes_agree"};
  if (a.check_bound) o.header.insert(o.header.end(), {"ln_bound", "bound_pass", "ln_ratio_sqrt_binomial"});
  json rows = json::array();
  bool ok = true;
  for (unsigned long m : ms) {
    const BigRational q = q_exact(m, a.n).value;
    bool agree = true;
    json routes_json = json::object();
    for (const auto& r : routes) {
      BigRational v = r == "exact"    ? q
                      : r == "series" ? q_series(m, a.n).value
                      : r == "recurrence" ? a_ell_sequence(m, a.n).back()
                                          : q_brute(m, a.n, c.threads, a.long_mode).value;
      routes_json[r] = v.get_str();
      agree = agree && v == q;
    }
    ok = ok && agree;
    json row = {{"m", m}, {"n", a.n}, {"Q", q.get_str()}, {"routes", routes_json}, {"routes_agree", agree}};
    std::vector<std::string> cells = {std::to_string(m), std::to_string(a.n), q.get_str(), fmt_double(q.get_d()),
                                      agree ? "true" : "false"};
    if (a.check_bound) {
      if (m >= 1 && 2 * m <= a.n) {
        const BoundReport b = saddle_bound_check(m, a.n);
        ok = ok && b.pass;
        row["bound"] = b.to_json();
        const std::string ratio =
            b.detail.contains("ln_ratio_to_sqrt_binomial") ? fmt_double(b.detail["ln_ratio_to_sqrt_binomial"]) : "";
        cells.insert(cells.end(), {b.bound.ln_abs().to_string(15), b.pass ? "true" : "false", ratio});
      } else {
        cells.insert(cells.end(), {"", "", ""});
      }
    }
    rows.push_back(row);
    o.rows.push_back(cells);
  }
  o.doc = {{"n", a.n}, {"rows", rows}, {"passed", ok}};
  emit(o, c);
  return ok ? kOk : kFailed;
}

// ---------------------------------------------------------------- majorarcs

struct MajorArgs {
  unsigned long n = 0;
  std::string range;
  unsigned m = 2;
  bool singular = false;
  unsigned M = 12;
};

int run_majorarcs(const MajorArgs& a, const Common& c) {
  Output o;
  if (a.singular) {
    o.header = {"M", "partial_sum", "exp(-1/2)", "difference"};
    json rows = json::array();
    const double target = std::exp(-0.5);
    for (unsigned k = 0; k <= a.M; ++k) {
      const Real v = singular_series(k);
      rows.push_back({{"M", k}, {"value", v.to_string(20)}, {"exact", singular_series_exact(k).get_str()}});
      o.rows.push_back({std::to_string(k), v.to_string(15), fmt_double(target, 15), fmt_double(v.to_double() - target)});
    }
    o.doc = {{"singular_series", rows}, {"limit", fmt_double(target, 17)}};
    emit(o, c);
    return kOk;
  }
  o.header = {"n", "m", "sum_over_trivial_cube", "main_coefficient", "n_times_error"};
  if (a.m == 2) o.header.push_back("closed_form_match");
  json rows = json::array();
  bool ok = true;
  for (unsigned long n : n_values(a.n, a.range)) {
    const MainTermReport r = main_term_with_sum(a.m, n, c.threads);
    const BigRational ratio = *r.exact_sum / trivial_cube_exact(n);
    json row = r.to_json();
    row["sum_over_trivial_cube"] = ratio.get_str();
    std::vector<std::string> cells = {std::to_string(n), std::to_string(a.m), ratio.get_str(),
                                      r.coefficient.get_str(), fmt_double(r.error_ratio->get_d())};
    if (a.m == 2) {
      const bool match = ratio == make_rational(-BigInt(n), BigInt(2 * (n - 1)));
      ok = ok && match;
      row["closed_form_match"] = match;
      cells.push_back(match ? "true" : "false");
    }
    rows.push_back(row);
    o.rows.push_back(cells);
  }
  o.doc = {{"m", a.m}, {"rows", rows}, {"passed", ok}};
  emit(o, c);
  return ok ? kOk : kFailed;
}

// ---------------------------------------------------------------- bounds

struct BoundsArgs {
  unsigned long n = 0;
  std::string suite = "all";
  double epsilon = -1, R = -1;
  long M = -1;
  std::vector<double> thresholds = {0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 1.75, 2.0};
  std::string json_out;
  bool long_mode = false;
};

int run_bounds(const BoundsArgs& a, Common c) {
  if (a.n == 0) throw UsageError("bounds needs --n");
  if (!a.json_out.empty()) {
    c.out = a.json_out;
    c.format = "json";
  }
  const std::vector<std::string> known = {"entropy", "srh", "tail", "um", "matrix", "linfty", "census", "regions"};
  if (a.suite != "all" && std::find(known.begin(), known.end(), a.suite) == known.end())
    throw UsageError("unknown suite '" + a.suite + "'");
  auto want = [&](const std::string& s) { return a.suite == "all" || a.suite == s; };
  const PinnedConstants pins = load_pins(c);
  const double eps = a.epsilon > 0 ? a.epsilon : pins.epsilon;
  const double R = a.R > 0 ? a.R : pins.R;
  const unsigned M = a.M > 0 ? static_cast<unsigned>(a.M) : pins.M;

  std::vector<SpectrumEntry> spec;
  const bool needs_spec = a.suite != "matrix" && a.suite != "census";
  if (needs_spec) {
    if (a.n > (a.long_mode ? 9u : 7u)) throw LimitExceeded("bound sweeps are exhaustive: n <= 7 (9 with --long)");
    SpectrumOptions so;
    so.threads = c.threads;
    so.exhaustive_limit = 9;
    spec = spectrum(a.n, so);
  }
  Output o;
  o.header = {"suite", "reports", "failures", "min_margin"};
  json suites = json::object();
  bool ok = true;
  auto record = [&](const std::string& name, const std::vector<BoundReport>& rs) {
    json arr = json::array();
    double worst = std::numeric_limits<double>::infinity();
    for (const auto& r : rs) {
      arr.push_back(r.to_json());
      worst = std::min(worst, r.margin);
    }
    const std::size_t f = count_failures(rs);
    ok = ok && f == 0;
    suites[name] = {{"failures", f}, {"reports", arr}};
    o.rows.push_back({name, std::to_string(rs.size()), std::to_string(f), fmt_double(worst)});
  };
  if (want("entropy")) record("entropy", entropy_bound_check(spec));
  if (want("srh")) record("srh", srh_bound_check(spec));
  if (want("tail")) {
    std::vector<BoundReport> rs;
    for (double r : {1.0, 2.0, 3.0, 10.0}) rs.push_back(tail_bound_check(spec, r));
    if (a.R > 0) rs.push_back(tail_bound_check(spec, a.R));
    record("tail", rs);
  }
  if (want("um")) {
    require_odd(a.n, "U_m domination");
    const UmTable t = um_solve(a.n, static_cast<unsigned>(a.n));
    record("um", um_domination_check(spec, t));
  }
  if (want("matrix")) record("matrix", matrix_identities_sweep(std::max<unsigned long>(a.n, 200)));
  if (want("linfty")) record("linfty", linfty_ratio_report(spec, pins.linfty_c));
  json doc = {{"n", a.n}, {"suites", suites}};
  if (want("census")) {
    json buckets = json::array();
    for (const auto& b : entropy_census(a.n, a.thresholds))
      buckets.push_back({{"lo", b.lo}, {"hi", std::isinf(b.hi) ? json("inf") : json(b.hi)}, {"count", b.count.get_str()}});
    doc["census"] = buckets;
  }
  if (want("regions")) {
    const RegionDecomposition r = region_decomposition(spec, eps, R, M);
    const bool exact = r.total() == power_sum(spec, 3);
    ok = ok && exact;
    doc["regions"] = r.to_json();
    doc["regions"]["total_matches_cube_sum"] = exact;
  }
  doc["passed"] = ok;
  o.doc = doc;
  emit(o, c);
  return ok ? kOk : kFailed;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  unsigned long n = 0;
  bool long_mode = false;
  double epsilon = -1, R = -1;
  long M = -1;
  std::string json_out;
  bool timing = false;
};

int run_verify_cmd(const VerifyArgs& a, Common c) {
  if (a.n == 0) throw UsageError("verify needs --n");
  if (!a.json_out.empty()) {
    c.out = a.json_out;
    c.format = "json";
  }
  VerifyOptions vo;
  vo.threads = c.threads;
  vo.long_mode = a.long_mode;
  vo.pins = load_pins(c);
  vo.epsilon = a.epsilon > 0 ? a.epsilon : vo.pins.epsilon;
  vo.R = a.R > 0 ? a.R : vo.pins.R;
  vo.M = a.M > 0 ? static_cast<unsigned>(a.M) : vo.pins.M;
  const VerifyResult r = run_verify(a.n, vo);
  Output o;
  o.doc = r.bundle();
  // Timing stays out of the bundle so that reruns compare byte for byte.
  if (a.timing) o.doc["timing"] = r.timing();
  o.header = {"suite", "status", "checks", "failures"};
  for (const auto& s : r.suites) o.rows.push_back({s.name, s.status, std::to_string(s.checks.size()), std::to_string(s.failures)});
  o.notes.push_back(std::to_string(r.suites_passed()) + " suites passed; overall " + (r.passed() ? "PASS" : "FAIL"));
  emit(o, c);
  return r.passed() ? kOk : kFailed;
}

// ---------------------------------------------------------------- asymptotics

int run_asymptotics(unsigned long n, const std::string& range, const Common& c) {
  const auto ns = n_values(n, range.empty() && n == 0 ? "1:13:2" : range);
  Output o;
  o.header = {"n", "s_n", "ratio", "log_rate"};
  json rows = json::array();
  for (unsigned long k : ns) {
    require_odd(k, "asymptotics");
    if (k > 15) throw LimitExceeded("asymptotics limited to n <= 15");
    CountOptions co;
    co.threads = c.threads;
    const CountResult r = count_orthomorphisms(k, co);
    // ratio = s_n n^{n-1} / n!^3, rate = (1/n) ln(s_n / n!^2)
    const BigInt f = factorial(k);
    const BigRational ratio = make_rational(r.s_n * power(k, k - 1), f * f * f);
    const double rate = (log_abs(r.s_n) - log_abs(BigInt(f * f))).to_double() / static_cast<double>(k);
    rows.push_back({{"n", k}, {"s_n", r.s_n.get_str()}, {"ratio", ratio.get_d()}, {"log_rate", rate}});
    o.rows.push_back({std::to_string(k), r.s_n.get_str(), fmt_double(ratio.get_d()), fmt_double(rate)});
  }
  o.doc = {{"rows", rows}, {"limit_ratio", std::exp(-0.5)}};
  emit(o, c);
  return kOk;
}

// ---------------------------------------------------------------- montecarlo

int run_montecarlo(unsigned long n, std::uint64_t samples, std::uint64_t seed, const Common& c) {
  if (n == 0) throw UsageError("montecarlo needs --n");
  const MonteCarloResult r = monte_carlo_collision(n, samples, seed, c.threads);
  Output o;
  o.doc = {{"n", n}, {"samples", r.samples}, {"seed", seed}, {"hits", r.hits}, {"estimate", r.estimate},
           {"standard_error", r.standard_error}};
  o.header = {"n", "samples", "seed", "hits", "estimate", "standard_error"};
  std::vector<std::string> row = {std::to_string(n), std::to_string(r.samples), std::to_string(seed),
                                  std::to_string(r.hits), fmt_double(r.estimate), fmt_double(r.standard_error)};
  if (n <= 11) {
    const CountResult exact = count_orthomorphisms(n);
    const BigInt f = factorial(n);
    const double p = make_rational(exact.s_n, f * f).get_d();
    const double z = r.standard_error > 0 ? (r.estimate - p) / r.standard_error : 0.0;
    o.doc["exact"] = p;
    o.doc["z_score"] = z;
    o.header.insert(o.header.end(), {"exact", "z_score"});
    row.insert(row.end(), {fmt_double(p), fmt_double(z)});
  }
  o.rows.push_back(row);
  emit(o, c);
  return kOk;
}

// ---------------------------------------------------------------- reproduce-3003

int run_reproduce(bool long_mode, long precision, const Common& c) {
  if (!long_mode) throw UsageError("reproduce-3003 is a long computation; pass --long");
  if (precision < 8192) throw UsageError("reproduce-3003 needs --precision >= 8192");
  const CharacterMultiset chi = parse_character("n=3003;(1/3^1001,2/3^1001,0^1001)");
  DftOptions d;
  d.precision = precision;
  d.tolerance = 1e-30;
  d.threads = c.threads;
  const FourierValue v = structured_dft(chi, d);
  const double measured = v.log_ratio().ln_abs().to_double();
  const unsigned long args[] = {3003, 1001, 1001, 1001};
  const double comparison = -0.5 * log_combinatorial(Combinatorial::multinomial, args).ln_abs().to_double();
  const double target = -1649.01782245, target_cmp = -1645.46757758;
  const bool ok = std::abs(measured - target) <= 1e-6 && std::abs(comparison - target_cmp) <= 1e-6;
  Output o;
  json hist = json::array();
  for (const auto& s : v.escalation)
    hist.push_back({{"precision", s.precision}, {"relative_error", s.relative_error}, {"accepted", s.accepted}});
  o.doc = {{"character", chi.to_string()},
           {"ln_ratio", v.log_ratio().ln_abs().to_string(20)},
           {"target", target},
           {"ln_ratio_error", measured - target},
           {"half_log_multinomial", comparison},
           {"comparison_target", target_cmp},
           {"comparison_error", comparison - target_cmp},
           {"escalation", hist},
           {"error_radius", v.approx->err().to_string(6)},
           {"elapsed_ms", v.elapsed_ms},
           {"passed", ok}};
  o.header = {"quantity", "computed", "target"};
  o.rows.push_back({"ln(|S|n^n/n!)", fmt_double(measured, 15), fmt_double(target, 15)});
  o.rows.push_back({"-1/2 ln multinomial", fmt_double(comparison, 15), fmt_double(target_cmp, 15)});
  emit(o, c);
  return ok ? kOk : kFailed;
}

// ---------------------------------------------------------------- bench

int run_bench(const Common& c) {
  Output o;
  o.header = {"kernel", "ms"};
  json rows = json::array();
  auto time = [&](const std::string& name, const std::function<void()>& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    rows.push_back({{"kernel", name}, {"ms", ms}});
    o.rows.push_back({name, fmt_double(ms, 6)});
  };
  time("orthomorphisms n=11", [&] {
    CountOptions co;
    co.threads = c.threads;
    count_orthomorphisms(11, co);
  });
  time("partition formula m=8 n=101", [] {
    sparse_fourier_partition(parse_character("n=101;(0^93,1/101,2/101,3/101,4/101,97/101,98/101,99/101,100/101)"));
  });
  time("recursion spectrum n=7", [&] {
    SpectrumOptions so;
    so.threads = c.threads;
    spectrum(7, so);
  });
  time("structured dp n=99", [] { structured_dp(parse_character("n=99;(1/3^33,2/3^33,0^33)")); });
  time("structured dft n=99 P=512", [&] {
    DftOptions d;
    d.precision = 512;
    d.threads = c.threads;
    structured_dft(parse_character("n=99;(1/3^33,2/3^33,0^33)"), d);
  });
  time("brute fourier n=9 full", [] {
    brute_fourier(parse_character("n=9;(0^3,1/9^3,8/9^3)"), BrutePath::full_bijections);
  });
  o.doc = {{"rows", rows}, {"threads", c.threads}};
  emit(o, c);
  return kOk;
}

// ---------------------------------------------------------------- pin-constants

// Regenerates the pinned constants from oracle sweeps: the largest value seen,
// rounded up in the fourth significant digit.
int run_pin(const Common& c) {
  auto ceil4 = [](double x) {
    if (x <= 0) return 0.0;
    const double scale = std::pow(10.0, 3 - std::floor(std::log10(x)));
    return std::ceil(x * scale) / scale;
  };
  PinnedConstants p = PinnedConstants::builtin();
  double c_max = 0;
  for (unsigned long n : {3ul, 5ul, 7ul}) {
    SpectrumOptions so;
    so.threads = c.threads;
    for (const auto& e : spectrum(n, so)) {
      const unsigned long m = e.chi.sparsity();
      if (m < 1 || 3 * m > 2 * n || e.scaled == 0) continue;
      c_max = std::max(c_max, linfty_rho(e.scaled, m, n).to_double() / linfty_shape(m, n));
    }
  }
  p.linfty_c = ceil4(c_max);
  p.pairing.clear();
  for (unsigned m = 2; m <= 8; m += 2) {
    double worst = 0;
    for (unsigned long n = m + 1 + (m % 2 == 0 ? 0 : 1); n <= 31; n += 2) {
      if (n % 2 == 0) continue;
      const BigRational e = pairing_error(standard_pairing(m, n));
      worst = std::max(worst, BigRational(abs(e) * BigRational(n)).get_d());
    }
    p.pairing[m] = ceil4(worst);
  }
  p.odd_parity.clear();
  for (unsigned m = 1; m <= 7; m += 2) {
    double worst = 0;
    for (unsigned long n : {3ul, 5ul, 7ul}) {
      if (m > n) continue;
      const BigRational r = abs(msparse_cube_sum(m, n, c.threads)) / trivial_cube_exact(n) * BigRational(n);
      worst = std::max(worst, r.get_d());
    }
    p.odd_parity[m] = ceil4(worst);
  }
  Output o;
  o.doc = p.to_json();
  emit(o, c);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Additive triples of bijections of Z/nZ: counts, Fourier coefficients and bound checks"};
  app.require_subcommand(1);

  Common common;

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "count orthomorphisms and additive triples");
  count->add_option("--n", count_args.n, "group order");
  count->add_option("--mode", count_args.mode, "backtrack|direct")->check(CLI::IsMember({"backtrack", "direct"}));
  count->add_option("--group", count_args.group, "abelian group as cyclic orders, e.g. 3x3");
  count->add_flag("--fix-zero", count_args.fix_zero, "fix pi(0)=0 and multiply by n");
  add_common(count, common);

  FourierArgs fourier_args;
  auto* fourier = app.add_subcommand("fourier", "one Fourier coefficient of the bijection indicator");
  fourier->add_option("--char", fourier_args.chi, "character, e.g. \"n=7;(0^3,1/7^2,6/7^2)\"")->required();
  fourier->add_option("--method", fourier_args.method, "auto|brute|partition|recursion|dp|dft");
  fourier->add_option("--precision", fourier_args.precision, "working precision in bits (dft)");
  fourier->add_option("--ceiling", fourier_args.ceiling, "precision ceiling in bits (dft)");
  fourier->add_option("--tolerance", fourier_args.tolerance, "relative error target (dft)");
  fourier->add_option("--cache", fourier_args.cache, "coefficient cache file or directory");
  add_common(fourier, common);

  SparsevalArgs sv_args;
  auto* sparseval = app.add_subcommand("sparseval", "Q(m,n) by several routes");
  sparseval->add_option("--n", sv_args.n, "n")->required();
  sparseval->add_option("--m", sv_args.m, "single m");
  sparseval->add_flag("--all-m", sv_args.all_m, "every 0 <= m <= n");
  sparseval->add_option("--routes", sv_args.routes, "comma list of exact,series,recurrence,brute");
  sparseval->add_flag("--check-bound", sv_args.check_bound, "check the saddle-point bound for m <= n/2");
  sparseval->add_flag("--long", sv_args.long_mode, "allow n = 9 for the brute route");
  add_common(sparseval, common);

  MajorArgs ma_args;
  auto* majorarcs = app.add_subcommand("majorarcs", "m-sparse cube sums against the main terms");
  majorarcs->add_option("--n", ma_args.n, "n");
  majorarcs->add_option("--n-range", ma_args.range, "a:b:s");
  majorarcs->add_option("--m", ma_args.m, "sparsity");
  majorarcs->add_flag("--singular-series", ma_args.singular, "partial sums of the singular series");
  majorarcs->add_option("--M", ma_args.M, "last term of the singular series");
  majorarcs->add_option("--report", common.format, "alias of --format")->check(CLI::IsMember({"json", "csv", "text"}));
  add_common(majorarcs, common);

  BoundsArgs b_args;
  auto* bounds = app.add_subcommand("bounds", "pointwise and aggregate bound suites");
  bounds->add_option("--n", b_args.n, "n")->required();
  bounds->add_option("--suite", b_args.suite, "all|entropy|srh|tail|um|matrix|linfty|census|regions");
  bounds->add_option("--epsilon", b_args.epsilon, "low-entropy threshold");
  bounds->add_option("--R", b_args.R, "high-entropy threshold");
  bounds->add_option("--M", b_args.M, "number of main terms");
  bounds->add_option("--thresholds", b_args.thresholds, "census bucket edges");
  bounds->add_option("--json", b_args.json_out, "write the JSON report here");
  bounds->add_flag("--long", b_args.long_mode, "allow n = 9");
  add_common(bounds, common);

  VerifyArgs v_args;
  auto* verify = app.add_subcommand("verify", "run every verification suite");
  verify->add_option("--n", v_args.n, "n")->required();
  verify->add_flag("--long", v_args.long_mode, "exhaustive extras and n = 9");
  verify->add_option("--epsilon", v_args.epsilon, "low-entropy threshold");
  verify->add_option("--R", v_args.R, "high-entropy threshold");
  verify->add_option("--M", v_args.M, "number of main terms");
  verify->add_option("--json", v_args.json_out, "write the bundle here");
  verify->add_flag("--timing", v_args.timing, "include per-suite timings");
  add_common(verify, common);

  unsigned long as_n = 0;
  std::string as_range;
  auto* asym = app.add_subcommand("asymptotics", "s_n n^{n-1}/n!^3 against e^{-1/2}");
  asym->add_option("--n", as_n, "single odd n");
  asym->add_option("--n-range", as_range, "a:b:s over odd n, max 15");
  add_common(asym, common);

  unsigned long mc_n = 0;
  std::uint64_t mc_samples = 1'000'000, mc_seed = 1;
  auto* mc = app.add_subcommand("montecarlo", "probability that pi_1 + pi_2 is a bijection");
  mc->add_option("--n", mc_n, "n")->required();
  mc->add_option("--samples", mc_samples, "number of sampled pairs (>= 1000)");
  mc->add_option("--seed", mc_seed, "seed");
  add_common(mc, common);

  bool rp_long = false;
  long rp_precision = 8192;
  auto* rp = app.add_subcommand("reproduce-3003", "the n = 3003 coefficient with three classes of 1001");
  rp->add_flag("--long", rp_long, "confirm the long run");
  rp->add_option("--precision", rp_precision, "starting precision in bits (>= 8192)");
  add_common(rp, common);

  auto* bench = app.add_subcommand("bench", "time the main kernels");
  add_common(bench, common);

  auto* pin = app.add_subcommand("pin-constants", "recompute the pinned constants from oracle sweeps");
  add_common(pin, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (common.threads == 0) throw UsageError("--threads must be positive");
    if (*count) return run_count(count_args, common);
    if (*fourier) return run_fourier(fourier_args, common);
    if (*sparseval) return run_sparseval(sv_args, common);
    if (*majorarcs) return run_majorarcs(ma_args, common);
    if (*bounds) return run_bounds(b_args, common);
    if (*verify) return run_verify_cmd(v_args, common);
    if (*asym) return run_asymptotics(as_n, as_range, common);
    if (*mc) return run_montecarlo(mc_n, mc_samples, mc_seed, common);
    if (*rp) return run_reproduce(rp_long, rp_precision, common);
    if (*bench) return run_bench(common);
    if (*pin) return run_pin(common);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceError& e) {
    std::cerr << "resource error: " << e.what() << '\n';
    return kResource;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  }
  return kUsage;
}
