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

#include <filesystem>
#include <fstream>
#include <map>
#include <string>

#include <nlohmann/json.hpp>

#include "triples/errors.hpp"

namespace triples {

// Constants standing in for unspecified O(.) constants. Each was pinned from
// an oracle sweep (see tools/triples pin-constants); the suites then enforce
// them as regression bounds, never as claims about the asymptotics.
struct PinnedConstants {
  static constexpr int kVersion = 1;

  // rho(chi) <= c (m^{3/2}/n^{1/2} + m^{1/2}) for sparse chi.
  double linfty_c = 0;
  // n |E| <= C_m for uniquely paired characters, per even m.
  std::map<unsigned, double> pairing;
  // n |sum over m-sparse chi of S^3| n^{3n}/n!^3 <= C_m, per odd m.
  std::map<unsigned, double> odd_parity;
  double epsilon = 0.01;
  double R = 10;
  unsigned M = 12;

  static PinnedConstants builtin() {
    PinnedConstants p;
    p.linfty_c = 0.1803;
    p.pairing = {{2, 1.5}, {4, 10.21}, {6, 43.03}, {8, 26.18}};
    p.odd_parity = {{1, 0.0}, {3, 6.0}, {5, 16.53}, {7, 31.7}};
    return p;
  }

  static PinnedConstants from_json(const nlohmann::json& j) {
    if (j.at("version").get<int>() != kVersion)
      throw UsageError("pinned constants: unsupported version " + j.at("version").dump());
    PinnedConstants p;
    p.linfty_c = j.at("linfty_c").get<double>();
    for (auto& [k, v] : j.at("pairing").items()) p.pairing[static_cast<unsigned>(std::stoul(k))] = v.get<double>();
    for (auto& [k, v] : j.at("odd_parity").items())
      p.odd_parity[static_cast<unsigned>(std::stoul(k))] = v.get<double>();
    const auto& d = j.at("defaults");
    p.epsilon = d.at("epsilon").get<double>();
    p.R = d.at("R").get<double>();
    p.M = d.at("M").get<unsigned>();
    return p;
  }

  nlohmann::json to_json() const {
    nlohmann::json pj = nlohmann::json::object(), oj = nlohmann::json::object();
    for (auto [k, v] : pairing) pj[std::to_string(k)] = v;
    for (auto [k, v] : odd_parity) oj[std::to_string(k)] = v;
    return {{"version", kVersion},
            {"linfty_c", linfty_c},
            {"pairing", pj},
            {"odd_parity", oj},
            {"defaults", {{"epsilon", epsilon}, {"R", R}, {"M", M}}}};
  }

  static PinnedConstants load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read config " + path.string());
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw UsageError("config " + path.string() + ": " + e.what());
    }
    return from_json(j);
  }

  // The shipped config when it is reachable, else the compiled-in copy.
  static PinnedConstants load_default() {
#ifdef TRIPLES_DEFAULT_CONFIG
    if (std::filesystem::exists(TRIPLES_DEFAULT_CONFIG)) return load(TRIPLES_DEFAULT_CONFIG);
#endif
    return builtin();
  }
};

}  // namespace triples
