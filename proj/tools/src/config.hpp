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

#ifndef FIOLAB_TOOLS_CONFIG_HPP_
#define FIOLAB_TOOLS_CONFIG_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fiolab/grid.hpp"
#include "fiolab/sharpness.hpp"

namespace fiolab::cli {

// Command-line settings that take precedence over the file.
struct Overrides {
  std::optional<std::pair<int, double>> grid;  // N, L
  std::optional<std::uint64_t> seed;
  std::optional<std::string> experiment;
};

// Parsed and validated experiment configuration (INI sections with key = value).
struct ExperimentConfig {
  std::string path;  // empty when no file was given
  std::string text;  // raw bytes of the file

  std::optional<GridSpec> grid;
  int dim = 1;

  double window_a = 1.0;
  double alpha = 0.5, beta = 0.5;

  std::string signal = "gaussian(1)";
  std::string signal_file;

  std::string op_kind = "fio1";
  std::string symbol = "one";
  std::string phase = "standard";

  double p = 2.0, q = 2.0;
  double s1 = 0.0, s2 = 0.0;
  std::optional<double> spacing;

  int radius_k = -1, radius_n = -1;
  std::string matrix_format = "csv";
  double zero_threshold = 1e-14;
  int spot_checks = 32;

  std::string experiment;
  double exp_p = 1.0;
  double m = 0.0;
  double m1 = -0.5, m2 = -0.5;
  SweepConfig sweep;
  std::vector<SuiteCase> cases;
  std::vector<int> sizes{1024, 2048};  // l2_stability grid sizes

  std::uint64_t seed = 1;

  // Grid of the [grid] section, or L = 16, N = 1024.
  GridSpec grid_or_default() const;
};

// Grid an experiment runs on: [grid] when given, else the experiment default.
GridSpec experiment_grid(const ExperimentConfig& c);

// Known experiment names, in the order of the help text.
const std::vector<std::string>& experiment_names();

// Input signal from a registry call: gaussian(a), bump(lo,hi), fn(n), fn(n,lo,hi),
// fejer(b), random_schwartz(terms). random_schwartz draws from seed.
Generator input_generator(const std::string& text, int d, std::uint64_t seed);

double parse_exponent(const std::string& text);
std::string format_exponent(double p);

// Reads the file (empty path: defaults only), applies overrides and validates
// every physical parameter. Throws ValidationError on unknown keys or bad values.
ExperimentConfig load_config(const std::string& path, const Overrides& ov = {});

// Same, from text already in memory.
ExperimentConfig parse_config(const std::string& text, const std::string& path, const Overrides& ov = {});

}  // namespace fiolab::cli

#endif  // FIOLAB_TOOLS_CONFIG_HPP_
