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

#include "fiolab/diffeo.hpp"
#include "fiolab/error.hpp"
#include "fiolab/sharpness.hpp"

using namespace fiolab;

TEST(Sharpness, WitnessIsModulatedBump) {
  const GridSpec g = GridSpec::make(1, 2.0, 1024);
  const Signal f = make_fn(g, 16.0);
  for (int m = 0; m < 1024; m += 31) {
    const double x = g.node(m);
    const double chi = std::abs(f.samples[m]);
    EXPECT_NEAR(std::abs(f.samples[m] - chi * std::polar(1.0, 2 * kPi * 16.0 * x)), 0.0, 1e-12);
    if (x <= 0.0 || x >= 1.0) EXPECT_EQ(chi, 0.0);
  }
  EXPECT_THROW(make_fn(g, 200.0), NumericalError);
}

TEST(Sharpness, ThresholdGap) {
  EXPECT_DOUBLE_EQ(threshold_gap(2.0), 0.0);
  EXPECT_DOUBLE_EQ(threshold_gap(1.0), 0.5);
  EXPECT_DOUBLE_EQ(threshold_gap(4.0, 2), 0.5);
}

TEST(Sharpness, FourierLebesgueGrowth) {
  SweepConfig cfg;
  const ExperimentResult r = fl_growth_experiment(1.0, cfg);
  ASSERT_EQ(r.rows.size(), 5u);
  EXPECT_GE(r.fit.slope, 0.4);
  EXPECT_LE(r.fit.slope, 0.6);
  EXPECT_GE(r.fit.r_squared, 0.95);
  EXPECT_TRUE(r.pass);
  for (const auto& row : r.rows) EXPECT_NEAR(row.ratio, row.norm_out / row.norm_in, 1e-15);
}

TEST(Sharpness, FourierLebesgueControls) {
  SweepConfig cfg;
  EXPECT_LE(std::abs(fl_growth_experiment(2.0, cfg).fit.slope), 0.05);
  cfg.c = 0.0;
  EXPECT_LE(std::abs(fl_growth_experiment(1.0, cfg).fit.slope), 0.05);
}

TEST(Sharpness, SweepGuard) {
  SweepConfig cfg;
  cfg.ns = {16, 4096};
  EXPECT_THROW(fl_growth_experiment(1.0, cfg), std::exception);
  cfg.ns = {16};
  EXPECT_THROW(fl_growth_experiment(1.0, cfg), ValidationError);
}
