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

#include <limits>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "triples/log_magnitude.hpp"

namespace triples {

inline constexpr double kMarginSlack = 1e-9;

// measured <= bound, compared on the log scale. margin = ln|bound| - ln|measured|.
struct BoundReport {
  std::string subject;
  LogMagnitude measured;
  LogMagnitude bound;
  double margin = 0;
  bool pass = false;
  nlohmann::json detail = nlohmann::json::object();

  static BoundReport make(std::string subject, LogMagnitude measured, LogMagnitude bound,
                          nlohmann::json detail = nlohmann::json::object()) {
    BoundReport r;
    r.subject = std::move(subject);
    r.measured = measured.abs();
    r.bound = bound.abs();
    if (r.measured.is_zero()) {
      r.margin = std::numeric_limits<double>::infinity();
    } else if (r.bound.is_zero()) {
      r.margin = -std::numeric_limits<double>::infinity();
    } else {
      r.margin = (r.bound.ln_abs() - r.measured.ln_abs()).to_double();
    }
    r.pass = r.margin >= -kMarginSlack;
    r.detail = std::move(detail);
    return r;
  }

  // Same, but the verdict comes from an exact comparison made by the caller.
  static BoundReport make_exact(std::string subject, LogMagnitude measured, LogMagnitude bound, bool exact_pass,
                                nlohmann::json detail = nlohmann::json::object()) {
    BoundReport r = make(std::move(subject), std::move(measured), std::move(bound), std::move(detail));
    r.pass = exact_pass;
    r.detail["exact_comparison"] = true;
    return r;
  }

  nlohmann::json to_json() const {
    auto num = [](double x) -> nlohmann::json {
      if (x == std::numeric_limits<double>::infinity()) return "inf";
      if (x == -std::numeric_limits<double>::infinity()) return "-inf";
      return x;
    };
    return {{"subject", subject},
            {"measured", measured.to_json()},
            {"bound", bound.to_json()},
            {"margin", num(margin)},
            {"pass", pass},
            {"detail", detail}};
  }
};

inline std::size_t count_failures(const std::vector<BoundReport>& reports) {
  std::size_t f = 0;
  for (const auto& r : reports) f += r.pass ? 0 : 1;
  return f;
}

}  // namespace triples
