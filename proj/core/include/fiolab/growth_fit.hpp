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

#ifndef FIOLAB_GROWTH_FIT_HPP_
#define FIOLAB_GROWTH_FIT_HPP_

#include <string>
#include <utility>
#include <vector>

namespace fiolab {

// Least-squares fit of log(value) against log(parameter).
struct GrowthFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;  // NaN when the values are constant
  double max_min_ratio = 1.0;
  std::vector<std::pair<double, double>> sweep;

  // r^2 >= r2_min, or for flat data max/min <= flat_ratio.
  bool well_fitted(double r2_min = 0.95, double flat_ratio = 1.3) const;
};

GrowthFit fit_growth(const std::vector<double>& params, const std::vector<double>& values);

enum class Verdict { Bounded, Unbounded, Inconclusive };
enum class Expectation { Bounded, Unbounded };

const char* to_string(Verdict v);
const char* to_string(Expectation e);

// Unbounded iff slope > 0.1, bounded iff slope <= 0.05.
Verdict classify_slope(double slope);

struct ThresholdVerdict {
  double p = 1.0;
  double m1 = 0.0;  // frequency order (or m~)
  double m2 = 0.0;  // space order
  Expectation expected = Expectation::Bounded;
  double measured_slope = 0.0;
  Verdict verdict = Verdict::Inconclusive;
  GrowthFit fit;
  std::string note;

  bool matches() const {
    return (expected == Expectation::Bounded && verdict == Verdict::Bounded) ||
           (expected == Expectation::Unbounded && verdict == Verdict::Unbounded);
  }
};

}  // namespace fiolab

#endif  // FIOLAB_GROWTH_FIT_HPP_
