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
#include "fiolab/grid.hpp"
#include "oracles.hpp"

using namespace fiolab;

TEST(Grid, NodesAndDual) {
  const GridSpec g = GridSpec::make(1, 8.0, 256);
  EXPECT_DOUBLE_EQ(g.space_step(), 1.0 / 16);
  EXPECT_DOUBLE_EQ(g.node(0), -8.0);
  EXPECT_DOUBLE_EQ(g.freq(128), 0.0);
  EXPECT_DOUBLE_EQ(g.nyquist(), 8.0);
  const GridSpec d = g.dual();
  EXPECT_DOUBLE_EQ(d.half_width, 256.0 / 32.0);
  for (int k : {0, 17, 128, 255}) EXPECT_NEAR(d.node(k), g.freq(k), 1e-12);
  EXPECT_TRUE(g.self_dual());
}

TEST(Grid, RejectsBadSpecs) {
  EXPECT_THROW(GridSpec::make(4, 1.0, 64), ValidationError);
  EXPECT_THROW(GridSpec::make(1, -1.0, 64), ValidationError);
  EXPECT_THROW(GridSpec::make(1, 1.0, 63), ValidationError);
}

TEST(Grid, FlattenRoundTrip) {
  const GridSpec g = GridSpec::make(3, 2.0, 8);
  for (std::size_t i = 0; i < g.size(); i += 37) {
    int idx[3];
    g.unflatten(i, idx);
    EXPECT_EQ(g.flatten(idx), i);
  }
}

// e^{-pi x^2} is its own Fourier transform.
TEST(Fourier, GaussianIsFixedPoint) {
  const GridSpec g = GridSpec::make(1, 8.0, 256);
  const Signal f = Signal::from_generator(g, gen::gaussian(1));
  const Signal F = fourier_transform(f);
  for (int k = 0; k < 256; ++k) EXPECT_NEAR(std::abs(F.samples[k] - std::exp(-kPi * std::pow(F.grid.node(k), 2))), 0.0, 1e-12);
}

TEST(Fourier, MatchesDirectQuadrature) {
  const GridSpec g = GridSpec::make(1, 4.0, 64);
  const Signal f = Signal::from_generator(g, gen::random_schwartz(1, 7));
  const Signal F = fourier_transform(f);
  for (int k = 0; k < 64; k += 5) EXPECT_NEAR(std::abs(F.samples[k] - oracle::fourier_at(f, g.freq(k))), 0.0, 1e-12);
  const Signal back = inverse_fourier(F);
  EXPECT_LT(relative_l2_error(back, f), 1e-13);
}

TEST(Fourier, Plancherel2d) {
  const GridSpec g = GridSpec::make(2, 4.0, 32);
  const Signal f = Signal::from_generator(g, gen::random_schwartz(2, 3));
  EXPECT_NEAR(lp_norm(fourier_transform(f), 2.0), lp_norm(f, 2.0), 1e-12);
}

TEST(Grid, GaussianNorms) {
  const GridSpec g = GridSpec::make(1, 8.0, 512);
  const Signal f = Signal::from_generator(g, gen::gaussian(1));
  EXPECT_NEAR(lp_norm(f, 2.0), std::pow(2.0, -0.25), 1e-12);
  EXPECT_NEAR(lp_norm(f, 1.0), 1.0, 1e-12);
  EXPECT_NEAR(lp_norm(f, std::numeric_limits<double>::infinity()), 1.0, 1e-15);
  EXPECT_NEAR(oracle::l2(f), lp_norm(f, 2.0), 1e-14);
}

TEST(Grid, TranslateAndModulate) {
  const GridSpec g = GridSpec::make(1, 8.0, 256);
  const Signal f = Signal::from_generator(g, gen::gaussian(1));
  const Signal t = translate(f, 1.5);
  const Signal ref = oracle::sample(g, [](double x) { return cplx(std::exp(-kPi * (x - 1.5) * (x - 1.5))); });
  EXPECT_LT(oracle::max_abs_diff(t.samples, ref.samples), 1e-14);
  const Signal m = modulate(f, 2.0);
  const Signal refm = oracle::sample(g, [](double x) { return std::exp(-kPi * x * x) * std::polar(1.0, 2 * kPi * 2.0 * x); });
  EXPECT_LT(oracle::max_abs_diff(m.samples, refm.samples), 1e-14);
}

// |f(lambda .)|_2 = lambda^{-1/2} |f|_2 in d = 1.
TEST(Grid, DilationScalesL2) {
  const GridSpec g = GridSpec::make(1, 16.0, 1024);
  const Signal f = Signal::from_generator(g, gen::gaussian(1));
  for (double lam : {0.5, 2.0, 4.0}) EXPECT_NEAR(lp_norm(dilate(f, lam), 2.0), lp_norm(f, 2.0) / std::sqrt(lam), 1e-10);
}

TEST(Grid, InnerProduct) {
  const GridSpec g = GridSpec::make(1, 4.0, 128);
  const Signal a = Signal::from_generator(g, gen::random_schwartz(1, 1));
  const Signal b = Signal::from_generator(g, gen::random_schwartz(1, 2));
  EXPECT_LT(std::abs(inner_product(a, b) - oracle::inner(a, b)), 1e-14);
}
