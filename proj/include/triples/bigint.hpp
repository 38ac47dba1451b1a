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

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>

#include "triples/errors.hpp"

namespace triples {

using BigInt = mpz_class;
using BigRational = mpq_class;

// num/den in lowest terms (the two-argument mpq constructor does not reduce).
inline BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw UsageError("zero denominator");
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

inline BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  if (k > n) return r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// n! / (parts[0]! parts[1]! ...). Requires sum(parts) == n.
inline BigInt multinomial(unsigned long n, std::span<const unsigned> parts) {
  unsigned long total = 0;
  BigInt r = 1;
  for (unsigned a : parts) {
    total += a;
    r *= binomial(total, a);
  }
  if (total != n) throw UsageError("multinomial: parts do not sum to n");
  return r;
}

// n (n-1) ... (n-k+1)
inline BigInt falling_factorial(unsigned long n, unsigned long k) {
  BigInt r = 1;
  if (k > n) return 0;
  for (unsigned long i = 0; i < k; ++i) r *= n - i;
  return r;
}

inline BigInt power(unsigned long base, unsigned long exp) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

inline BigRational power(const BigRational& base, unsigned long exp) {
  BigRational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), exp);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), exp);
  r.canonicalize();
  return r;
}

inline BigInt abs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }
inline BigRational abs(const BigRational& x) { return x < 0 ? BigRational(-x) : x; }

inline std::string to_string(const BigInt& x) { return x.get_str(); }
inline std::string to_string(const BigRational& x) { return x.get_str(); }

inline BigInt parse_bigint(const std::string& s) {
  BigInt r;
  if (r.set_str(s, 10) != 0) throw UsageError("not an integer: " + s);
  return r;
}

inline BigRational parse_bigrational(const std::string& s) {
  BigRational r;
  if (r.set_str(s, 10) != 0) throw UsageError("not a rational: " + s);
  if (r.get_den() == 0) throw UsageError("zero denominator: " + s);
  r.canonicalize();
  return r;
}

}  // namespace triples
