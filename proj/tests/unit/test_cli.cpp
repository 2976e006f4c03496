// Copyright 2026 The fiolab Authors.
//
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
//

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include <unistd.h>

#include "cli.hpp"
#include "config.hpp"
#include "fiolab/error.hpp"
#include "manifest.hpp"

namespace fs = std::filesystem;
using fiolab::cli::run_cli;

namespace {

fs::path configs() {
  const char* env = std::getenv("FIOLAB_CONFIGS");
  return env ? fs::path(env) : fs::path("tools/configs");
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("fiolab_cli_test_" + std::to_string(::getpid())) / name;
  fs::remove_all(p);
  return p;
}

struct CliRun {
  int code;
  std::string out, err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "fiolab");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, NormOfBundledGaussianIsL2) {
  const fs::path out = scratch("norm");
  const CliRun r = run({"norm", "--config", (configs() / "gaussian_norm.ini").string(), "--out", out.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  std::smatch m;
  ASSERT_TRUE(std::regex_search(r.out, m, std::regex(R"(= ([0-9.eE+-]+)\n)")));
  EXPECT_NEAR(std::stod(m[1]), std::pow(2.0, -0.25), 1e-6);
  EXPECT_TRUE(fs::exists(out / "norm.csv"));
  EXPECT_TRUE(fs::exists(out / "manifest.ini"));
  EXPECT_FALSE(fs::exists(out / "manifest.partial"));
}

TEST(Cli, FlGrowthDefaultConfig) {
  const fs::path out = scratch("fl");
  const CliRun r = run({"experiment", "--config", (configs() / "fl_growth.ini").string(), "--out", out.string(), "--plot"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream csv(slurp(out / "fl_growth.csv"));
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line, "# schema=1");
  std::getline(csv, line);
  EXPECT_EQ(line, "family,n,norm_in,norm_out,ratio");
  int rows = 0;
  while (std::getline(csv, line)) ++rows;
  EXPECT_EQ(rows, 5);
  std::smatch m;
  const std::string verdict = slurp(out / "fl_growth_verdict.ini");
  ASSERT_TRUE(std::regex_search(verdict, m, std::regex(R"(\nslope=([0-9.eE+-]+))")));
  EXPECT_GE(std::stod(m[1]), 0.4);
  EXPECT_NE(slurp(out / "fl_growth.svg").find("<svg"), std::string::npos);
}

TEST(Cli, ValidatePhase) {
  const CliRun r = run({"validate", "phase_xphi(0.3)", "--out", scratch("val").string()});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("delta_min"), std::string::npos);
  EXPECT_NE(r.out.find("growth ratios"), std::string::npos);
  EXPECT_EQ(run({"validate", "degenerate", "--out", scratch("val2").string()}).code, 1);
}

TEST(Cli, RejectsUnknownKeys) {
  const fs::path dir = scratch("bad");
  fs::create_directories(dir);
  std::ofstream(dir / "bad.ini") << "[experiment]\nname = fl_growth\nbogus = 1\n";
  const CliRun r = run({"experiment", "--config", (dir / "bad.ini").string(), "--out", (dir / "o").string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("bogus"), std::string::npos);
  EXPECT_FALSE(fs::exists(dir / "o" / "manifest.ini"));
}

TEST(Cli, ValidatesSweepAgainstGridAtLoad) {
  EXPECT_THROW(fiolab::cli::parse_config("[experiment]\nname = fl_growth\nns = 16, 4096\n", ""), fiolab::ValidationError);
  EXPECT_THROW(fiolab::cli::parse_config("[experiment]\nname = theorem_mo\np = 2\n", ""), fiolab::ValidationError);
  EXPECT_THROW(fiolab::cli::parse_config("[norm]\np = 0.5\n", ""), fiolab::ValidationError);
  EXPECT_THROW(fiolab::cli::parse_config("[operator]\nsymbol = nope\n", ""), fiolab::ValidationError);
  EXPECT_NO_THROW(fiolab::cli::parse_config("[norm]\np = inf\n", ""));
}

TEST(Cli, AliasingIsNumericalFailure) {
  const fs::path dir = scratch("alias");
  fs::create_directories(dir);
  std::ofstream(dir / "a.ini") << "[grid]\nhalf_width = 8\nsamples = 256\n[operator]\nkind = fio1\nsymbol = one\n"
                                  "phase = phase_xphi(0.3)\n[input]\nsignal = random_schwartz(4)\n";
  const CliRun r = run({"apply", "--config", (dir / "a.ini").string(), "--out", (dir / "o").string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(slurp(dir / "o" / "manifest.ini").find("status=failed"), std::string::npos);
}

TEST(Cli, RerunIsByteIdentical) {
  const fs::path a = scratch("det_a"), b = scratch("det_b");
  ASSERT_EQ(run({"experiment", "--config", (configs() / "fl_growth.ini").string(), "--out", a.string()}).code, 0);
  const CliRun r = run({"rerun", (a / "manifest.ini").string(), "--out", b.string()});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("byte-identical"), std::string::npos);
  EXPECT_EQ(slurp(a / "fl_growth.csv"), slurp(b / "fl_growth.csv"));
}

TEST(Cli, InterruptedRunLeavesMarker) {
  const fs::path dir = scratch("marker");
  {
    fiolab::cli::RunManifest m(dir, {"fiolab", "norm"}, "norm");
    m.begin();
    EXPECT_TRUE(fs::exists(dir / "manifest.partial"));
    EXPECT_NE(slurp(dir / "manifest.ini").find("status=running"), std::string::npos);
  }
  EXPECT_TRUE(fs::exists(dir / "manifest.partial"));
  fiolab::cli::RunManifest m(dir, {"fiolab", "norm"}, "norm");
  m.begin();
  m.finish(0);
  EXPECT_FALSE(fs::exists(dir / "manifest.partial"));
}

TEST(Cli, Sha256KnownVector) {
  EXPECT_EQ(fiolab::cli::sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
