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

#include "fiolab/error.hpp"
#include "fiolab/growth_fit.hpp"

using namespace fiolab;

TEST(GrowthFit, ExactPowerLaw) {
  std::vector<double> n{16, 32, 64, 128, 256}, v;
  for (double x : n) v.push_back(3.0 * std::pow(x, 0.5));
  const GrowthFit f = fit_growth(n, v);
  EXPECT_NEAR(f.slope, 0.5, 1e-12);
  EXPECT_NEAR(std::exp(f.intercept), 3.0, 1e-10);
  EXPECT_NEAR(f.r_squared, 1.0, 1e-12);
  EXPECT_TRUE(f.well_fitted());
}

// Least squares on (log n, log v) by the normal equations.
TEST(GrowthFit, NoisyDataMatchesNormalEquations) {
  std::vector<double> n{2, 3, 5, 8, 13}, v{1.1, 1.9, 2.2, 3.5, 4.0};
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n.size(); ++i) {
    const double x = std::log(n[i]), y = std::log(v[i]);
    sx += x, sy += y, sxx += x * x, sxy += x * y;
  }
  const double k = static_cast<double>(n.size());
  const double slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
  EXPECT_NEAR(fit_growth(n, v).slope, slope, 1e-12);
}

TEST(GrowthFit, FlatData) {
  const GrowthFit f = fit_growth({1, 2, 4}, {2.0, 2.0, 2.0});
  EXPECT_NEAR(f.slope, 0.0, 1e-14);
  EXPECT_TRUE(f.well_fitted());
}

TEST(GrowthFit, RejectsShortSweeps) { EXPECT_THROW(fit_growth({1.0}, {1.0}), ValidationError); }

TEST(GrowthFit, VerdictBands) {
  EXPECT_EQ(classify_slope(0.5), Verdict::Unbounded);
  EXPECT_EQ(classify_slope(0.11), Verdict::Unbounded);
  EXPECT_EQ(classify_slope(0.07), Verdict::Inconclusive);
  EXPECT_EQ(classify_slope(0.05), Verdict::Bounded);
  EXPECT_EQ(classify_slope(-0.3), Verdict::Bounded);
}
