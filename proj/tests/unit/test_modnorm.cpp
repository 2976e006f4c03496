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

#include "fiolab/gabor.hpp"
#include "fiolab/generators.hpp"
#include "fiolab/modnorm.hpp"
#include "oracles.hpp"

using namespace fiolab;

namespace {

// |V_g f| for f = e^{-pi lambda^2 x^2} and the unit Gaussian window is
// 2^{1/4} (1 + l^2)^{-1/2} e^{-pi l^2 x^2 / (1 + l^2)} e^{-pi eta^2 / (1 + l^2)}.
double gaussian_mp(double lambda, double p) {
  const double s = 1.0 + lambda * lambda;
  const double C = std::pow(2.0, 0.25) / std::sqrt(s);
  if (std::isinf(p)) return C;
  return C * std::pow(s / (p * lambda), 1.0 / p);
}

}  // namespace

class GaussianModNorm : public ::testing::TestWithParam<std::tuple<double, double>> {};

TEST_P(GaussianModNorm, MatchesClosedForm) {
  const auto [lambda, p] = GetParam();
  const GridSpec g = GridSpec::make(1, 8.0, 256);
  const Signal f = Signal::from_generator(g, gen::gaussian(1, lambda * lambda));
  const double v = mod_norm(f, p, p, WeightSpec{}, Window::gaussian(g)).value;
  EXPECT_NEAR(v / gaussian_mp(lambda, p), 1.0, 1e-9);
}

INSTANTIATE_TEST_SUITE_P(Dilations, GaussianModNorm,
                         ::testing::Combine(::testing::Values(0.5, 1.0, 2.0), ::testing::Values(1.0, 2.0, kInf)));

// Frequency weight <eta>^1: |V_g g <eta>|_2^2 = (1 + 1 / (2 pi)) for the unit Gaussian.
TEST(ModNorm, FrequencyWeight) {
  const GridSpec g = GridSpec::make(1, 8.0, 256);
  const Window w = Window::gaussian(g);
  const double v = mod_norm(w.signal, 2, 2, WeightSpec{1.0, 0.0}, w).value;
  EXPECT_NEAR(v, std::sqrt(1.0 + 1.0 / (2 * kPi)), 1e-9);
  const double u = mod_norm(w.signal, 2, 2, WeightSpec{0.0, 1.0}, w).value;
  EXPECT_NEAR(u, std::sqrt(1.0 + 1.0 / (2 * kPi)), 1e-9);
}

TEST(ModNorm, MoyalForRandomSignals) {
  const GridSpec g = GridSpec::make(1, 16.0, 512);
  const Window w = Window::gaussian(g);
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const Signal f = Signal::from_generator(g, gen::random_schwartz(1, seed));
    EXPECT_NEAR(mod_norm(f, 2, 2, WeightSpec{}, w).value, oracle::l2(f), 1e-9);
  }
}

TEST(ModNorm, SpacedSamplingIsCloseToDense) {
  const GridSpec g = GridSpec::make(1, 8.0, 256);
  const Window w = Window::gaussian(g);
  const Signal f = Signal::from_generator(g, gen::random_schwartz(1, 4));
  ModNormOptions opt;
  opt.spacing = 0.125;
  // |V_g f| has kinks at its zeros, so the spaced Riemann sum is only algebraically accurate.
  EXPECT_NEAR(mod_norm(f, 1, 1, WeightSpec{}, w, opt).value / mod_norm(f, 1, 1, WeightSpec{}, w).value, 1.0, 1e-4);
}

TEST(ModNorm, FourierLebesgueOfGaussian) {
  const GridSpec g = GridSpec::make(1, 8.0, 256);
  const Signal f = Signal::from_generator(g, gen::gaussian(1));
  EXPECT_NEAR(fl_norm(f, 1.0), 1.0, 1e-12);
  EXPECT_NEAR(fl_norm(f, 2.0), std::pow(2.0, -0.25), 1e-12);
}

TEST(ModNorm, SequenceNormEquivalence) {
  const GridSpec g = GridSpec::make(1, 8.0, 256);
  const Window w = Window::gaussian(g);
  const GaborLattice lat = make_lattice(g, 0.5, 0.5);
  std::vector<Signal> corpus;
  for (std::uint64_t s = 1; s <= 6; ++s) corpus.push_back(Signal::from_generator(g, gen::random_schwartz(1, s)));
  for (double p : {1.0, 2.0, kInf}) {
    const RatioInterval r = gabor_norm_equivalence_check(corpus, p, p, WeightSpec{}, w, lat);
    EXPECT_LT(r.spread(), 10.0) << "p=" << p;
  }
}

// At p = 2 the seq norm of a tight frame equals the L2 norm.
TEST(ModNorm, TightFrameSequenceNormIsL2) {
  const GridSpec g = GridSpec::make(1, 8.0, 256);
  const GaborLattice lat = make_lattice(g, 0.5, 0.5);
  const Window h = tight_window(Window::gaussian(g), lat);
  const Signal f = Signal::from_generator(g, gen::random_schwartz(1, 2));
  EXPECT_NEAR(seq_norm(gabor_analysis(f, h, lat), 2, 2, WeightSpec{}), oracle::l2(f), 1e-8);
}

// Asymptotic slopes of the Gaussian closed form respect the dilation indices.
TEST(ModNorm, DilationIndicesBoundGaussianSlopes) {
  for (double p : {1.0, 2.0, kInf}) {
    const double up = std::log(gaussian_mp(2e4, p) / gaussian_mp(1e4, p)) / std::log(2.0);
    const double down = std::log(gaussian_mp(2e-4, p) / gaussian_mp(1e-4, p)) / std::log(2.0);
    EXPECT_LE(up, mu1(p) + 1e-6) << "p=" << p;
    EXPECT_GE(down, mu2(p) - 1e-6) << "p=" << p;
  }
  EXPECT_NEAR(mu1(2.0), -0.5, 1e-15);
  EXPECT_NEAR(mu2(2.0), -0.5, 1e-15);
  EXPECT_NEAR(mu1(1.0), 0.0, 1e-15);
  EXPECT_NEAR(mu2(1.0), -1.0, 1e-15);
}

TEST(ModNorm, DilationExponentAtTwo) {
  const GridSpec g = GridSpec::make(1, 16.0, 1024);
  const Signal f = Signal::from_generator(g, gen::gaussian(1));
  const DilationReport up = dilation_exponent_check(f, 2.0, {1.0, 1.5, 2.0, 3.0}, Window::gaussian(g));
  EXPECT_NEAR(up.fit.slope, -0.5, 0.02);
  EXPECT_TRUE(up.pass);
}
