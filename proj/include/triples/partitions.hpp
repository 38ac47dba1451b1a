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

#include <span>
#include <string>
#include <vector>

#include "triples/bigint.hpp"
#include "triples/group.hpp"

namespace triples {

// Partition of {0..m-1} into nonempty disjoint blocks.
struct SetPartition {
  std::vector<std::vector<unsigned>> blocks;

  std::size_t size() const { return blocks.size(); }
  unsigned ground_size() const {
    unsigned m = 0;
    for (const auto& b : blocks) m += static_cast<unsigned>(b.size());
    return m;
  }
  std::string to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      s += i ? ",{" : "{";
      for (std::size_t j = 0; j < blocks[i].size(); ++j) s += (j ? "," : "") + std::to_string(blocks[i][j] + 1);
      s += "}";
    }
    return s + "}";
  }
};

inline constexpr unsigned kMaxKillingSize = 12;

// mu(P) = (-1)^{m-|P|} prod_B (|B|-1)!
inline BigInt partition_mobius(const SetPartition& p) {
  BigInt mu = 1;
  for (const auto& b : p.blocks) {
    if (b.empty()) throw UsageError("partition blocks must be nonempty");
    mu *= factorial(b.size() - 1);
  }
  if ((p.ground_size() - p.size()) % 2 == 1) mu = -mu;
  return mu;
}

// Visits every partition of {0..m-1} all of whose blocks have value sum 0 mod n.
template <typename Visitor>
void for_each_killing_partition(unsigned long n, std::span<const DualElement> values, Visitor&& visit) {
  const unsigned m = static_cast<unsigned>(values.size());
  if (m > kMaxKillingSize) throw LimitExceeded("killing partitions limited to m <= 12");
  std::vector<unsigned> label(m);
  std::vector<unsigned long> sums;
  unsigned nonzero_blocks = 0;
  auto rec = [&](auto&& self, unsigned i) -> void {
    // Each block with nonzero sum still needs at least one more element.
    if (nonzero_blocks > m - i) return;
    if (i == m) {
      SetPartition p;
      p.blocks.resize(sums.size());
      for (unsigned j = 0; j < m; ++j) p.blocks[label[j]].push_back(j);
      visit(p);
      return;
    }
    const unsigned long v = values[i].numerator % n;
    for (unsigned b = 0; b <= sums.size(); ++b) {
      const bool fresh = b == sums.size();
      if (fresh) sums.push_back(0);
      const unsigned long before = sums[b];
      const unsigned long after = (before + v) % n;
      const int delta = int(after != 0) - int(before != 0);
      nonzero_blocks = static_cast<unsigned>(int(nonzero_blocks) + delta);
      sums[b] = after;
      label[i] = b;
      self(self, i + 1);
      sums[b] = before;
      nonzero_blocks = static_cast<unsigned>(int(nonzero_blocks) - delta);
      if (fresh) sums.pop_back();
    }
  };
  rec(rec, 0);
}

inline std::vector<SetPartition> killing_partitions(unsigned long n, std::span<const DualElement> values) {
  std::vector<SetPartition> out;
  for_each_killing_partition(n, values, [&](const SetPartition& p) { out.push_back(p); });
  return out;
}

// Aggregates over the killing partitions of (r_1..r_m).
struct KillingSummary {
  unsigned long count = 0;
  unsigned max_parts = 0;
  unsigned long count_with_max_parts = 0;
  BigInt weighted_sum = 0;    // sum mu(P) n^{|P|}
  BigInt abs_mobius_sum = 0;  // sum |mu(P)|
};

inline KillingSummary summarize_killing(unsigned long n, std::span<const DualElement> values) {
  KillingSummary s;
  for_each_killing_partition(n, values, [&](const SetPartition& p) {
    const BigInt mu = partition_mobius(p);
    ++s.count;
    const unsigned parts = static_cast<unsigned>(p.size());
    if (parts > s.max_parts) {
      s.max_parts = parts;
      s.count_with_max_parts = 0;
    }
    if (parts == s.max_parts) ++s.count_with_max_parts;
    s.weighted_sum += mu * power(n, parts);
    s.abs_mobius_sum += abs(mu);
  });
  return s;
}

}  // namespace triples
