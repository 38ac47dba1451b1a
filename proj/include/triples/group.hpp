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
#include <charconv>
#include <compare>
#include <numeric>
#include <optional>
#include <cctype>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "triples/bigint.hpp"
#include "triples/errors.hpp"
#include "triples/real.hpp"

namespace triples {

// Z/nZ. Odd n for the main results; even n is allowed for diagnostics.
class CyclicGroup {
 public:
  explicit CyclicGroup(unsigned long n) : n_(n) {
    if (n == 0) throw UsageError("group order must be positive");
  }
  unsigned long order() const { return n_; }
  bool odd() const { return n_ % 2 == 1; }
  unsigned long add(unsigned long a, unsigned long b) const { return (a + b) % n_; }
  unsigned long neg(unsigned long a) const { return a == 0 ? 0 : n_ - a; }
  unsigned long reduce(long long a) const {
    long long r = a % static_cast<long long>(n_);
    return static_cast<unsigned long>(r < 0 ? r + static_cast<long long>(n_) : r);
  }

 private:
  unsigned long n_;
};

// r = numerator / n in (1/n)Z/Z.
struct DualElement {
  unsigned long numerator = 0;
  friend auto operator<=>(const DualElement&, const DualElement&) = default;
};

// Throws unless every value lies in [0, n).
inline void check_range(unsigned long n, std::span<const DualElement> values) {
  for (auto v : values)
    if (v.numerator >= n) throw UsageError("dual element out of range for n=" + std::to_string(n));
}

// A character of (Z/nZ)^n up to coordinate permutation: the multiset
// (r_1^{a_1}, ..., r_k^{a_k}) with values strictly increasing.
class CharacterMultiset {
 public:
  struct Part {
    DualElement value;
    unsigned multiplicity = 0;
    friend auto operator<=>(const Part&, const Part&) = default;
  };

  // Parts may come in any order and may repeat values.
  static CharacterMultiset from_parts(unsigned long n, std::vector<Part> parts) {
    if (n == 0) throw UsageError("character order must be positive");
    std::sort(parts.begin(), parts.end());
    std::vector<Part> merged;
    unsigned long total = 0;
    for (const auto& p : parts) {
      if (p.value.numerator >= n) throw UsageError("character value out of range");
      if (p.multiplicity == 0) continue;
      total += p.multiplicity;
      if (!merged.empty() && merged.back().value == p.value) {
        merged.back().multiplicity += p.multiplicity;
      } else {
        merged.push_back(p);
      }
    }
    if (total != n) throw UsageError("multiplicities must sum to n=" + std::to_string(n));
    return CharacterMultiset(n, std::move(merged));
  }

  // counts[b] = multiplicity of b/n.
  static CharacterMultiset from_counts(std::span<const unsigned> counts) {
    std::vector<Part> parts;
    for (std::size_t b = 0; b < counts.size(); ++b)
      if (counts[b] > 0) parts.push_back({{b}, counts[b]});
    return from_parts(counts.size(), std::move(parts));
  }

  unsigned long n() const { return n_; }
  const std::vector<Part>& parts() const { return parts_; }
  std::size_t distinct() const { return parts_.size(); }

  unsigned multiplicity_of(unsigned long b) const {
    for (const auto& p : parts_)
      if (p.value.numerator == b) return p.multiplicity;
    return 0;
  }

  // Number of nonzero coordinates.
  unsigned long sparsity() const { return n_ - multiplicity_of(0); }

  bool zero_sum() const {
    unsigned long s = 0;
    for (const auto& p : parts_) s = (s + (p.multiplicity % n_) * p.value.numerator) % n_;
    return s == 0;
  }

  std::vector<unsigned> multiplicities() const {
    std::vector<unsigned> a;
    for (const auto& p : parts_) a.push_back(p.multiplicity);
    return a;
  }

  // Coordinates in sorted order.
  std::vector<DualElement> expanded() const {
    std::vector<DualElement> out;
    for (const auto& p : parts_) out.insert(out.end(), p.multiplicity, p.value);
    return out;
  }

  // The nonzero coordinates in sorted order (m of them).
  std::vector<DualElement> nonzero_values() const {
    std::vector<DualElement> out;
    for (const auto& p : parts_)
      if (p.value.numerator != 0) out.insert(out.end(), p.multiplicity, p.value);
    return out;
  }

  // multinomial(n; a_1, ..., a_k), the size of the permutation orbit.
  BigInt orbit_size() const { return multinomial(n_, multiplicities()); }

  // (1/n) ln multinomial(n; a_1..a_k) in nats.
  Real entropy_real(mpfr_prec_t prec = 128) const {
    Real r = log_abs(orbit_size(), prec);
    mpfr_div_ui(r.raw(), r.raw(), n_, MPFR_RNDN);
    return r;
  }
  double entropy() const { return entropy_real().to_double(); }

  // chi + t (every coordinate shifted by t).
  CharacterMultiset shifted(DualElement t) const {
    std::vector<Part> parts;
    for (const auto& p : parts_) parts.push_back({{(p.value.numerator + t.numerator) % n_}, p.multiplicity});
    return from_parts(n_, std::move(parts));
  }

  // u * chi for a unit u.
  CharacterMultiset scaled(unsigned long u) const {
    if (std::gcd(u, n_) != 1) throw UsageError("scaled: multiplier must be a unit mod n");
    std::vector<Part> parts;
    for (const auto& p : parts_) parts.push_back({{(p.value.numerator * (u % n_)) % n_}, p.multiplicity});
    return from_parts(n_, std::move(parts));
  }

  CharacterMultiset negated() const { return scaled(n_ - 1 == 0 ? 1 : n_ - 1); }

  // "n=7;(0^3,1/7^2,3/7^2)"; values as reduced fractions, ^1 omitted.
  std::string to_string() const {
    std::string s = "n=" + std::to_string(n_) + ";(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ',';
      const unsigned long b = parts_[i].value.numerator;
      if (b == 0) {
        s += '0';
      } else {
        const unsigned long g = std::gcd(b, n_);
        s += std::to_string(b / g) + '/' + std::to_string(n_ / g);
      }
      if (parts_[i].multiplicity != 1) s += '^' + std::to_string(parts_[i].multiplicity);
    }
    s += ')';
    return s;
  }

  friend bool operator==(const CharacterMultiset& a, const CharacterMultiset& b) {
    return a.n_ == b.n_ && a.parts_ == b.parts_;
  }
  // Lexicographic on (n, parts); used as the shift-normalization tie-break.
  friend bool operator<(const CharacterMultiset& a, const CharacterMultiset& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.parts_ < b.parts_;
  }

 private:
  CharacterMultiset(unsigned long n, std::vector<Part> parts) : n_(n), parts_(std::move(parts)) {}

  unsigned long n_;
  std::vector<Part> parts_;
};

inline CharacterMultiset canonicalize(unsigned long n, std::span<const DualElement> raw) {
  if (raw.size() != n)
    throw UsageError("canonicalize: expected " + std::to_string(n) + " values, got " +
                     std::to_string(raw.size()));
  check_range(n, raw);
  std::vector<CharacterMultiset::Part> parts;
  for (auto v : raw) parts.push_back({v, 1});
  return CharacterMultiset::from_parts(n, std::move(parts));
}

struct ShiftNormalized {
  CharacterMultiset character;
  DualElement shift;  // character == original.shifted(shift)
};

// Maps a most frequent value to 0; among ties, the lexicographically least
// result wins.
inline ShiftNormalized shift_normalize(const CharacterMultiset& chi) {
  unsigned best_mult = 0;
  for (const auto& p : chi.parts()) best_mult = std::max(best_mult, p.multiplicity);
  std::optional<ShiftNormalized> best;
  for (const auto& p : chi.parts()) {
    if (p.multiplicity != best_mult) continue;
    DualElement t{(chi.n() - p.value.numerator) % chi.n()};
    CharacterMultiset c = chi.shifted(t);
    if (!best || c < best->character) best = ShiftNormalized{std::move(c), t};
  }
  return *best;
}

inline double entropy(const CharacterMultiset& chi) { return chi.entropy(); }
inline BigInt orbit_size(const CharacterMultiset& chi) { return chi.orbit_size(); }

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline long long parse_ll(std::string_view s, const std::string& context) {
  s = trim(s);
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw UsageError("malformed character text (" + context + "): '" + std::string(s) + "'");
  return v;
}

}  // namespace detail

// Parses the canonical text form. Values may be written as p/q with q | n (not
// necessarily reduced, possibly negative) or as 0; entries may repeat.
inline CharacterMultiset parse_character(std::string_view text) {
  std::string_view s = detail::trim(text);
  if (s.substr(0, 2) != "n=") throw UsageError("character text must start with 'n='");
  const auto semi = s.find(';');
  if (semi == std::string_view::npos) throw UsageError("character text: missing ';'");
  const long long nn = detail::parse_ll(s.substr(2, semi - 2), "n");
  if (nn <= 0) throw UsageError("character text: n must be positive");
  const unsigned long n = static_cast<unsigned long>(nn);
  std::string_view body = detail::trim(s.substr(semi + 1));
  if (body.size() < 2 || body.front() != '(' || body.back() != ')')
    throw UsageError("character text: values must be enclosed in parentheses");
  body = body.substr(1, body.size() - 2);
  std::vector<CharacterMultiset::Part> parts;
  while (!detail::trim(body).empty()) {
    const auto comma = body.find(',');
    std::string_view item = detail::trim(body.substr(0, comma));
    body = comma == std::string_view::npos ? std::string_view{} : body.substr(comma + 1);
    unsigned mult = 1;
    if (const auto caret = item.find('^'); caret != std::string_view::npos) {
      const long long m = detail::parse_ll(item.substr(caret + 1), "multiplicity");
      if (m <= 0) throw UsageError("character text: multiplicity must be positive");
      mult = static_cast<unsigned>(m);
      item = detail::trim(item.substr(0, caret));
    }
    long long p = 0, q = 1;
    if (const auto slash = item.find('/'); slash != std::string_view::npos) {
      p = detail::parse_ll(item.substr(0, slash), "numerator");
      q = detail::parse_ll(item.substr(slash + 1), "denominator");
    } else {
      p = detail::parse_ll(item, "value");
    }
    if (q <= 0 || n % static_cast<unsigned long>(q) != 0)
      throw UsageError("character text: denominator must divide n");
    if (item.find('/') == std::string_view::npos && p != 0)
      throw UsageError("character text: write nonzero values as p/q");
    const long long scale = static_cast<long long>(n) / q;
    const unsigned long b = CyclicGroup(n).reduce(p * scale);
    parts.push_back({{b}, mult});
  }
  return CharacterMultiset::from_parts(n, std::move(parts));
}

}  // namespace triples
