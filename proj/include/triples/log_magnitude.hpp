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

#include <nlohmann/json.hpp>

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "triples/bigint.hpp"
#include "triples/real.hpp"

namespace triples {

// sign * exp(ln_abs), for quantities like n!^3/n^{3n} that overflow doubles.
// Zero is sign 0 with ln_abs = -inf.
class LogMagnitude {
 public:
  LogMagnitude() : sign_(0), ln_abs_(Real::infinity(-1)) {}
  LogMagnitude(int sign, Real ln_abs) : sign_(sign), ln_abs_(std::move(ln_abs)) {
    if (sign_ == 0) ln_abs_ = Real::infinity(-1, ln_abs_.precision());
  }

  static LogMagnitude of(const BigInt& x, mpfr_prec_t prec = Real::kDefaultPrecision) {
    return {sgn(x), log_abs(x, prec)};
  }
  static LogMagnitude of(const BigRational& x, mpfr_prec_t prec = Real::kDefaultPrecision) {
    return {sgn(x), log_abs(x, prec)};
  }
  static LogMagnitude of(const Real& x) {
    if (x.is_zero()) return {};
    return {x.sign(), log(triples::abs(x))};
  }
  // exp(ln) with positive sign.
  static LogMagnitude from_log(Real ln) { return {1, std::move(ln)}; }

  int sign() const { return sign_; }
  bool is_zero() const { return sign_ == 0; }
  const Real& ln_abs() const { return ln_abs_; }
  double ln_abs_double() const { return ln_abs_.to_double(); }

  LogMagnitude& operator*=(const LogMagnitude& o) {
    sign_ *= o.sign_;
    if (sign_ == 0) {
      ln_abs_ = Real::infinity(-1, ln_abs_.precision());
    } else {
      ln_abs_ += o.ln_abs_;
    }
    return *this;
  }
  LogMagnitude& operator/=(const LogMagnitude& o) {
    if (o.sign_ == 0) throw UsageError("LogMagnitude: division by zero");
    sign_ *= o.sign_;
    if (sign_ != 0) ln_abs_ -= o.ln_abs_;
    return *this;
  }
  friend LogMagnitude operator*(LogMagnitude a, const LogMagnitude& b) { return a *= b; }
  friend LogMagnitude operator/(LogMagnitude a, const LogMagnitude& b) { return a /= b; }

  LogMagnitude pow(long k) const {
    if (k == 0) return from_log(Real(ln_abs_.precision()));
    int s = (sign_ < 0 && (k % 2 != 0)) ? -1 : (sign_ == 0 ? 0 : 1);
    if (s == 0) return {};
    Real scaled = ln_abs_;
    scaled *= Real(ln_abs_.precision(), k);
    return {s, scaled};
  }
  LogMagnitude abs() const { return {sign_ == 0 ? 0 : 1, ln_abs_}; }

  // Value as a Real; callers make sure it is representable.
  Real value() const {
    if (sign_ == 0) return Real(ln_abs_.precision());
    Real v = exp(ln_abs_);
    return sign_ < 0 ? -v : v;
  }

  nlohmann::json to_json() const {
    return {{"sign", sign_}, {"ln_abs", ln_abs_.to_string(15)}};
  }

 private:
  int sign_;
  Real ln_abs_;
};

enum class Combinatorial { factorial, binomial, multinomial };

namespace detail {
// Above this many bits the exact integer is skipped in favour of lngamma.
inline constexpr double kExactBitLimit = 1e6;

inline Real lnfact(unsigned long n, mpfr_prec_t prec) {
  Real x(prec + 16, static_cast<long>(n) + 1);
  Real r(prec + 16);
  mpfr_lngamma(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}
}  // namespace detail

// ln of n!, binomial(args[0], args[1]) or multinomial(args[0]; args[1..]).
inline LogMagnitude log_combinatorial(Combinatorial kind, std::span<const unsigned long> args,
                                      mpfr_prec_t prec = Real::kDefaultPrecision) {
  auto need = [&](std::size_t k) {
    if (args.size() < k) throw UsageError("log_combinatorial: missing arguments");
  };
  need(1);
  const unsigned long n = args[0];
  // Rough size of n! in bits, used to pick the exact or the lngamma path.
  const double bits = n < 2 ? 1.0 : (n * std::log2(static_cast<double>(n)) - n * 1.4427);
  const bool exact = bits <= detail::kExactBitLimit;
  switch (kind) {
    case Combinatorial::factorial:
      if (args.size() != 1) throw UsageError("factorial takes one argument");
      return exact ? LogMagnitude::of(factorial(n), prec)
                   : LogMagnitude::from_log(detail::lnfact(n, prec));
    case Combinatorial::binomial: {
      if (args.size() != 2) throw UsageError("binomial takes two arguments");
      const unsigned long k = args[1];
      if (k > n) return {};
      if (exact) return LogMagnitude::of(binomial(n, k), prec);
      Real r = detail::lnfact(n, prec);
      r -= detail::lnfact(k, prec);
      r -= detail::lnfact(n - k, prec);
      return LogMagnitude::from_log(r);
    }
    case Combinatorial::multinomial: {
      need(2);
      unsigned long total = 0;
      for (std::size_t i = 1; i < args.size(); ++i) total += args[i];
      if (total != n) throw UsageError("multinomial parts do not sum to n");
      if (exact) {
        std::vector<unsigned> parts(args.begin() + 1, args.end());
        return LogMagnitude::of(multinomial(n, parts), prec);
      }
      Real r = detail::lnfact(n, prec);
      for (std::size_t i = 1; i < args.size(); ++i) r -= detail::lnfact(args[i], prec);
      return LogMagnitude::from_log(r);
    }
  }
  return {};
}

}  // namespace triples
