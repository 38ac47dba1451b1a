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

#include <nlohmann/json.hpp>

#include "triples/bigint.hpp"
#include "triples/cyclotomic.hpp"
#include "triples/group.hpp"
#include "triples/log_magnitude.hpp"
#include "triples/tracked_complex.hpp"

namespace triples {

enum class Method { automatic, brute, partition, recursion, structured_dp, structured_dft };

inline std::string method_name(Method m) {
  switch (m) {
    case Method::automatic: return "auto";
    case Method::brute: return "brute";
    case Method::partition: return "partition";
    case Method::recursion: return "recursion";
    case Method::structured_dp: return "dp";
    case Method::structured_dft: return "dft";
  }
  return "?";
}

inline Method parse_method(const std::string& s) {
  for (Method m : {Method::automatic, Method::brute, Method::partition, Method::recursion,
                   Method::structured_dp, Method::structured_dft})
    if (method_name(m) == s) return m;
  throw UsageError("unknown method '" + s + "' (auto|brute|partition|recursion|dp|dft)");
}

struct PrecisionStep {
  mpfr_prec_t precision = 0;
  double relative_error = 0;
  bool accepted = false;
};

// One Fourier coefficient. Everything is stored scaled by n^n: n^n S^(chi) is
// always an integer, so `scaled` is the canonical exact form.
struct FourierValue {
  CharacterMultiset chi = CharacterMultiset::from_parts(1, {{{0}, 1}});
  Method method = Method::automatic;
  std::optional<BigInt> scaled;
  std::optional<CyclotomicValue> exact;
  std::optional<TrackedComplex> approx;
  std::vector<PrecisionStep> escalation;
  double elapsed_ms = 0;

  unsigned long n() const { return chi.n(); }

  // S^(chi) itself; needs the exact value.
  BigRational value() const {
    if (!scaled) throw UsageError("fourier value has no exact rational form");
    return make_rational(*scaled, power(n(), n()));
  }

  // |n^n S^|, exact when possible, else from the ball midpoint.
  LogMagnitude log_scaled(mpfr_prec_t prec = Real::kDefaultPrecision) const {
    if (scaled) return LogMagnitude::of(*scaled, prec);
    if (exact) {
      if (auto z = exact->as_integer()) return LogMagnitude::of(*z, prec);
    }
    if (approx) return LogMagnitude::of(approx->re().precision() >= prec ? approx->re() : approx->rounded(prec).re());
    throw UsageError("fourier value is empty");
  }

  // ln |S^(chi)|.
  LogMagnitude log_abs(mpfr_prec_t prec = Real::kDefaultPrecision) const {
    LogMagnitude l = log_scaled(prec).abs();
    return l / LogMagnitude::of(power(n(), n()), prec);
  }

  // |S^(chi)| n^n / n!, the ratio to the trivial bound.
  LogMagnitude log_ratio(mpfr_prec_t prec = Real::kDefaultPrecision) const {
    const unsigned long arg = n();
    return log_scaled(prec).abs() / log_combinatorial(Combinatorial::factorial, {&arg, 1}, prec);
  }

  nlohmann::json to_json(bool with_timing = true) const {
    nlohmann::json j;
    j["character"] = chi.to_string();
    j["method"] = method_name(method);
    if (scaled) {
      j["scaled"] = scaled->get_str();
      j["value"] = value().get_str();
    }
    if (exact) j["cyclotomic"] = exact->to_json();
    if (approx) {
      j["approx_scaled"] = approx->re().to_string(30);
      j["error_radius"] = approx->err().to_string(6);
    }
    j["log_abs"] = log_abs().to_json();
    j["log_ratio"] = log_ratio().to_json();
    if (!escalation.empty()) {
      auto& h = j["escalation"] = nlohmann::json::array();
      for (const auto& s : escalation)
        h.push_back({{"precision", s.precision}, {"relative_error", s.relative_error}, {"accepted", s.accepted}});
    }
    if (with_timing) j["timing"] = {{"elapsed_ms", elapsed_ms}};
    return j;
  }
};

}  // namespace triples
