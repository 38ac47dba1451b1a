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

#include <bit>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <vector>

#include "triples/bigint.hpp"
#include "triples/tracked_complex.hpp"

namespace triples {

using IntPoly = std::vector<BigInt>;  // coefficient of X^j at index j

namespace detail {

inline void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Quotient and remainder of a by a monic b.
inline std::pair<IntPoly, IntPoly> divmod_monic(IntPoly a, const IntPoly& b) {
  trim(a);
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return {{}, a};
  IntPoly q(a.size() - db);
  for (std::size_t i = a.size(); i-- > db;) {
    const BigInt lead = a[i];
    if (lead == 0) continue;
    q[i - db] = lead;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= lead * b[j];
  }
  a.resize(db);
  trim(a);
  trim(q);
  return {q, a};
}

}  // namespace detail

// Phi_d with integer coefficients, memoized.
inline const IntPoly& cyclotomic_polynomial(unsigned long d) {
  static std::mutex mu;
  static std::map<unsigned long, IntPoly> memo;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = memo.find(d); it != memo.end()) return it->second;
  }
  IntPoly num(d + 1);
  num[0] = -1;
  num[d] = 1;
  for (unsigned long e = 1; e < d; ++e) {
    if (d % e != 0) continue;
    num = detail::divmod_monic(num, cyclotomic_polynomial(e)).first;
  }
  std::lock_guard<std::mutex> lock(mu);
  return memo.emplace(d, std::move(num)).first->second;
}

// Element of Z[zeta_d] stored as sum c_j zeta_d^j modulo X^d - 1. Equality
// and zero tests reduce modulo Phi_d on demand.
class CyclotomicValue {
 public:
  static inline unsigned long max_order = 1ul << 16;

  explicit CyclotomicValue(unsigned long order) : order_(order) {
    if (order == 0) throw UsageError("cyclotomic order must be positive");
    if (order > max_order) throw LimitExceeded("cyclotomic order exceeds configured limit");
    c_.assign(order, BigInt(0));
  }

  static CyclotomicValue root(unsigned long order, long power) {
    CyclotomicValue v(order);
    v.add_root_multiple(power, 1);
    return v;
  }
  static CyclotomicValue integer(unsigned long order, const BigInt& x) {
    CyclotomicValue v(order);
    v.c_[0] = x;
    return v;
  }

  unsigned long order() const { return order_; }
  const std::vector<BigInt>& coefficients() const { return c_; }

  // this += k * zeta^power
  void add_root_multiple(long power, const BigInt& k) { c_[index(power)] += k; }

  // this * zeta^k
  CyclotomicValue rotated(long k) const {
    CyclotomicValue r(order_);
    for (unsigned long j = 0; j < order_; ++j) r.c_[index(static_cast<long>(j) + k)] = c_[j];
    return r;
  }

  CyclotomicValue embed(unsigned long new_order) const {
    if (new_order % order_ != 0) throw UsageError("embed: order must divide the new order");
    CyclotomicValue r(new_order);
    const unsigned long step = new_order / order_;
    for (unsigned long j = 0; j < order_; ++j) r.c_[j * step] = c_[j];
    return r;
  }

  CyclotomicValue conj() const {
    CyclotomicValue r(order_);
    for (unsigned long j = 0; j < order_; ++j) r.c_[index(-static_cast<long>(j))] = c_[j];
    return r;
  }

  CyclotomicValue operator-() const {
    CyclotomicValue r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
  }

  CyclotomicValue& operator+=(const CyclotomicValue& o) {
    if (o.order_ != order_) return *this = common(*this, o) + common(o, *this);
    for (unsigned long j = 0; j < order_; ++j) c_[j] += o.c_[j];
    return *this;
  }
  CyclotomicValue& operator-=(const CyclotomicValue& o) { return *this += -o; }
  CyclotomicValue& operator*=(const BigInt& k) {
    for (auto& x : c_) x *= k;
    return *this;
  }

  friend CyclotomicValue operator+(CyclotomicValue a, const CyclotomicValue& b) { return a += b; }
  friend CyclotomicValue operator-(CyclotomicValue a, const CyclotomicValue& b) { return a -= b; }
  friend CyclotomicValue operator*(const CyclotomicValue& a, const CyclotomicValue& b) {
    if (a.order_ != b.order_) return common(a, b) * common(b, a);
    const unsigned long d = a.order_;
    CyclotomicValue r(d);
    BigInt t;
    for (unsigned long i = 0; i < d; ++i) {
      if (a.c_[i] == 0) continue;
      for (unsigned long j = 0; j < d; ++j) {
        if (b.c_[j] == 0) continue;
        mpz_addmul(r.c_[(i + j) % d].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
      }
    }
    return r;
  }
  CyclotomicValue& operator*=(const CyclotomicValue& o) { return *this = *this * o; }

  // Remainder modulo Phi_d: the canonical representative, degree < phi(d).
  IntPoly reduced() const {
    return detail::divmod_monic(IntPoly(c_.begin(), c_.end()), cyclotomic_polynomial(order_)).second;
  }

  bool is_zero() const { return reduced().empty(); }

  // The value as an integer, when it is one.
  std::optional<BigInt> as_integer() const {
    IntPoly r = reduced();
    if (r.empty()) return BigInt(0);
    if (r.size() == 1) return r[0];
    return std::nullopt;
  }

  friend bool operator==(const CyclotomicValue& a, const CyclotomicValue& b) {
    return (a - b).is_zero();
  }

  // Numerical value; radius at most (sum |c_j|) 2^{4-P}.
  TrackedComplex to_tracked(mpfr_prec_t prec) const {
    if (prec < 64) throw UsageError("to_tracked: precision must be at least 64 bits");
    const mpfr_prec_t work = prec + 8 + static_cast<mpfr_prec_t>(std::bit_width(order_));
    TrackedComplex sum(work);
    for (unsigned long j = 0; j < order_; ++j) {
      if (c_[j] == 0) continue;
      TrackedComplex term = TrackedComplex::root_of_unity(static_cast<long>(j), order_, work);
      term *= c_[j];
      sum += term;
    }
    return sum.rounded(prec);
  }

  nlohmann::json to_json() const {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& x : c_) coeffs.push_back(x.get_str());
    return {{"order", order_}, {"coefficients", coeffs}};
  }

  static CyclotomicValue from_json(const nlohmann::json& j) {
    CyclotomicValue v(j.at("order").get<unsigned long>());
    const auto& coeffs = j.at("coefficients");
    if (coeffs.size() != v.order_) throw UsageError("cyclotomic json: coefficient count mismatch");
    for (std::size_t i = 0; i < coeffs.size(); ++i) v.c_[i] = parse_bigint(coeffs[i].get<std::string>());
    return v;
  }

 private:
  unsigned long index(long power) const {
    long d = static_cast<long>(order_);
    long r = power % d;
    return static_cast<unsigned long>(r < 0 ? r + d : r);
  }

  // a embedded into lcm(order(a), order(b)).
  static CyclotomicValue common(const CyclotomicValue& a, const CyclotomicValue& b) {
    return a.embed(std::lcm(a.order_, b.order_));
  }

  unsigned long order_;
  std::vector<BigInt> c_;
};

}  // namespace triples
