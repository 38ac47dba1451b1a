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


#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <string>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(TRIPLES_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json parse(const Run& r) { return nlohmann::json::parse(r.out); }

std::filesystem::path scratch(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("triples-cli-test-" + name);
  std::filesystem::remove_all(p);
  return p;
}

}  // namespace

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("--help").code, 0);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("count --n seven").code, 2);
  EXPECT_EQ(run("fourier --char 'n=7;(0^3,1/5^4)'").code, 2);
  EXPECT_EQ(run("fourier --char 'n=7;(0^7)' --method simplex").code, 2);
  EXPECT_EQ(run("fourier --char 'n=7;(0^7)' --precision 32").code, 2);
  EXPECT_EQ(run("asymptotics --n-range 3:7:1").code, 2);
  EXPECT_EQ(run("majorarcs --n-range 9:5:2").code, 2);
  EXPECT_EQ(run("reproduce-3003").code, 2);
  EXPECT_EQ(run("reproduce-3003 --long --precision 4096").code, 2);
  EXPECT_EQ(run("count --group 2x3").code, 2);
  EXPECT_EQ(run("count --n 5 --threads 0").code, 2);
}

TEST(Cli, ResourceErrorsExitThree) {
  EXPECT_EQ(run("count --n 17").code, 3);
  EXPECT_EQ(run("verify --n 9").code, 3);
  EXPECT_EQ(run("fourier --char 'n=99;(0^33,1/3^33,2/3^33)' --method dft --precision 64 --ceiling 64").code, 3);
}

TEST(Cli, FailedChecksExitOne) {
  const auto dir = scratch("pins");
  std::filesystem::create_directories(dir);
  const auto cfg = dir / "pins.json";
  std::ofstream(cfg) << R"({"version":1,"linfty_c":0.01,"pairing":{"2":1.5,"4":10.21,"6":43.03,"8":26.18},)"
                     << R"("odd_parity":{"1":0.0,"3":6.0,"5":16.53,"7":31.7},"defaults":{"epsilon":0.01,"R":10,"M":12}})";
  EXPECT_EQ(run("bounds --n 7 --suite linfty --config " + cfg.string()).code, 1);
  EXPECT_EQ(run("bounds --n 7 --suite linfty").code, 0);
  EXPECT_EQ(run("verify --n 5 --config " + cfg.string()).code, 1);
  std::filesystem::remove_all(dir);
}

TEST(Cli, Count) {
  const auto j = parse(run("count --n 9"));
  EXPECT_EQ(j.at("orthomorphisms"), "2025");
  EXPECT_EQ(j.at("s_n"), "734832000");
  EXPECT_EQ(run("count --n 5 --mode direct --format csv").out, "n,orthomorphisms,s_n\n5,15,1800\n");
  EXPECT_EQ(parse(run("count --group 3x3")).at("s_G"), "813214080");
}

TEST(Cli, VerifySuites) {
  const auto five = run("verify --n 5");
  ASSERT_EQ(five.code, 0);
  const auto j = parse(five);
  EXPECT_EQ(j.at("suites_passed"), 6);
  const auto four = run("verify --n 4");
  ASSERT_EQ(four.code, 0);
  const auto k = parse(four);
  int skipped = 0;
  for (const auto& s : k.at("suites")) skipped += s.at("status") == "skipped (even n)";
  EXPECT_EQ(skipped, 3);
  EXPECT_NE(four.out.find("\"s_n\": \"0\""), std::string::npos);
}

TEST(Cli, OutputIndependentOfThreads) {
  EXPECT_EQ(run("verify --n 5 --threads 1").out, run("verify --n 5 --threads 8").out);
  EXPECT_EQ(run("montecarlo --n 7 --samples 20000 --seed 5 --threads 1").out,
            run("montecarlo --n 7 --samples 20000 --seed 5 --threads 8").out);
  EXPECT_EQ(run("bounds --n 5 --format csv --threads 1").out, run("bounds --n 5 --format csv --threads 3").out);
}

TEST(Cli, OutFileMatchesStdout) {
  const auto dir = scratch("out");
  std::filesystem::create_directories(dir);
  const auto path = dir / "bundle.json";
  EXPECT_EQ(run("verify --n 3 --out " + path.string()).code, 0);
  std::ifstream in(path);
  const std::string file((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_EQ(file, run("verify --n 3").out);
  std::filesystem::remove_all(dir);
}

TEST(Cli, FourierCacheWarmRerun) {
  const auto dir = scratch("cache");
  const std::string args = "fourier --char 'n=15;(0^5,1/15^2,2/15,4/15,7/15,9/15,11/15,13/15^2,14/15)' --method recursion --cache " +
                           dir.string();
  const auto cold = parse(run(args));
  const auto warm = parse(run(args));
  EXPECT_FALSE(cold.at("cached").get<bool>());
  EXPECT_TRUE(warm.at("cached").get<bool>());
  EXPECT_EQ(cold.at("scaled"), warm.at("scaled"));
  EXPECT_TRUE(std::filesystem::exists(dir / "coefficients_n15.tsv"));
  std::filesystem::remove_all(dir);
}

TEST(Cli, Tables) {
  const auto a = run("asymptotics --n-range 3:3:2 --format csv");
  EXPECT_NE(a.out.find("3,18,0.75,"), std::string::npos);
  const auto m = parse(run("majorarcs --n-range 5:9:2 --m 2"));
  EXPECT_TRUE(m.at("passed").get<bool>());
  EXPECT_EQ(m.at("rows").at(0).at("sum_over_trivial_cube"), "-5/8");
  const auto s = run("sparseval --n 7 --routes exact,series,recurrence,brute --check-bound");
  EXPECT_EQ(s.code, 0);
}
