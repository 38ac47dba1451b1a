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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>

#include "triples/bigint.hpp"
#include "triples/errors.hpp"

namespace triples {

// Persistent store of exact scaled coefficients n^n S^(chi), one file per n.
//
//   # triples-coefficient-cache version=1 n=7
//   <canonical key>\t<method>\t<decimal integer>
//
// Records are only ever appended. Lines that fail to parse are skipped with a
// warning on stderr, so a file truncated mid-write stays usable.
class CoefficientCache {
 public:
  static constexpr int kVersion = 1;
  static constexpr const char* kEnvDir = "TRIPLES_CACHE_DIR";

  CoefficientCache(std::filesystem::path path, unsigned long n) : path_(std::move(path)), n_(n) { load(); }

  // <dir>/coefficients_n<n>.tsv, dir from the environment when not given.
  static std::filesystem::path default_path(unsigned long n, const std::string& dir = "") {
    std::filesystem::path base = dir;
    if (base.empty()) {
      const char* env = std::getenv(kEnvDir);
      base = env && *env ? env : ".triples-cache";
    }
    return base / ("coefficients_n" + std::to_string(n) + ".tsv");
  }

  unsigned long n() const { return n_; }
  const std::filesystem::path& path() const { return path_; }
  std::size_t skipped() const { return skipped_; }

  std::size_t size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return records_.size();
  }

  std::optional<BigInt> get(const std::string& key) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = records_.find(key);
    if (it == records_.end()) return std::nullopt;
    return it->second;
  }

  void put(const std::string& key, const std::string& method, const BigInt& value) {
    std::lock_guard<std::mutex> lock(mu_);
    if (!records_.emplace(key, value).second) return;
    std::ofstream out(path_, std::ios::app);
    if (!out) throw ResourceError("cannot append to cache file " + path_.string());
    out << key << '\t' << method << '\t' << value.get_str() << '\n';
  }

 private:
  std::string header() const {
    return "# triples-coefficient-cache version=" + std::to_string(kVersion) + " n=" + std::to_string(n_);
  }

  void load() {
    if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path());
    std::ifstream in(path_);
    if (!in) {
      std::ofstream out(path_);
      if (!out) throw ResourceError("cannot create cache file " + path_.string());
      out << header() << '\n';
      return;
    }
    std::stringstream body;
    body << in.rdbuf();
    const std::string text = body.str();
    // A final line without its newline was cut off mid-write; its value may be
    // a prefix of the real one, so it is never trusted.
    const bool torn = !text.empty() && text.back() != '\n';
    std::istringstream lines(text);
    std::string line;
    if (!std::getline(lines, line) || line != header())
      throw UsageError("cache file " + path_.string() + " has a foreign header (expected '" + header() + "')");
    std::size_t lineno = 1;
    while (std::getline(lines, line)) {
      ++lineno;
      const bool last = lines.peek() == std::char_traits<char>::eof();
      const auto t1 = line.find('\t');
      const auto t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
      BigInt v;
      if ((torn && last) || t2 == std::string::npos || t1 == 0 || v.set_str(line.substr(t2 + 1), 10) != 0 ||
          line.find("n=" + std::to_string(n_) + ";") != 0) {
        ++skipped_;
        std::cerr << "warning: " << path_.string() << ':' << lineno << ": skipping corrupt cache record\n";
        continue;
      }
      records_.emplace(line.substr(0, t1), v);
    }
    // Close the torn record with a field that keeps it unparseable, so the next
    // append starts on its own line and later loads still skip it.
    if (torn) std::ofstream(path_, std::ios::app) << "\ttorn\n";
  }

  std::filesystem::path path_;
  unsigned long n_;
  mutable std::mutex mu_;
  std::map<std::string, BigInt> records_;
  std::size_t skipped_ = 0;
};

}  // namespace triples
