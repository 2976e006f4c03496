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
#include "fiolab/generators.hpp"
#include "fiolab/opnorm.hpp"
#include "fiolab/phases.hpp"
#include "fiolab/symbols.hpp"

using namespace fiolab;

TEST(OpNorm, MultiplierNormIsSupOfSymbol) {
  const GridSpec g = GridSpec::make(1, 8.0, 256);
  // <eta>^{-1} peaks at eta = 0; <x>^{-1} at x = 0.
  EXPECT_NEAR(op_norm_l2(OperatorHandle::pseudo_kn(sym::multiplier(1, -1), g)).estimate, 1.0, 1e-4);
  EXPECT_NEAR(op_norm_l2(OperatorHandle::pseudo_kn(sym::space_weight(1, -1), g)).estimate, 1.0, 1e-4);
  const SymbolSpec two = general_symbol("two", 1, 0, 0, [](const double*, const double*) { return cplx(2.0); });
  EXPECT_NEAR(op_norm_l2(OperatorHandle::pseudo_kn(two, g)).estimate, 2.0, 1e-8);
}

// With Phi = phi(x) . eta and sigma = 1, type I is the pullback f -> f o phi, whose L2
// norm is sup (1 / phi')^{1/2}.
// |f o phi|_2 <= |f|_2 / sqrt(min phi'); extremizers concentrate at the dip, so the grid needs resolution there.
TEST(OpNorm, ChangeOfVariablesNorm) {
  const GridSpec g = GridSpec::make(1, 4.0, 1024);
  const PhaseSpec phi = phase_from_registry("phase_xphi(0.3)");
  OperatorHandle op = OperatorHandle::fio_type1(phi, sym::one(1), g);
  op.options.alias_guard = false;
  const OpNormReport r = op_norm_l2(op);
  const double exact = 1.0 / std::sqrt(make_diffeo(0.3).min_d1());
  EXPECT_NEAR(r.estimate, exact, 0.01);
  EXPECT_LT(r.estimate, exact);
  EXPECT_GT(r.estimate, r.lower * (1 - 1e-12));
}

TEST(OpNorm, CorpusRatioIsLowerBound) {
  const GridSpec g = GridSpec::make(1, 8.0, 256);
  const OperatorHandle op = OperatorHandle::pseudo_kn(sym::multiplier(1, -1), g);
  std::vector<Signal> c;
  for (int s = 1; s <= 3; ++s) c.push_back(Signal::from_generator(g, gen::random_schwartz(1, s)));
  const Window w = Window::gaussian(g);
  const OpNormReport r = op_norm_estimate(op, 2.0, NormEstimateMethod::CorpusMaxRatio, c, &w);
  EXPECT_LE(r.estimate, 1.0 + 1e-9);
  EXPECT_GT(r.estimate, 0.0);
  EXPECT_THROW(op_norm_estimate(op, 1.0, NormEstimateMethod::PowerIterL2, c), ValidationError);
}
