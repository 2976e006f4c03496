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

#include "fiolab/generators.hpp"
#include "fiolab/stft.hpp"
#include "oracles.hpp"

using namespace fiolab;

namespace {

double stft_l2(const StftData& V) {
  double s = 0.0;
  for (const auto& v : V.values) s += std::norm(v);
  const double dx = V.grid.space_step() * V.sampling.x_stride, de = V.grid.freq_step() * V.sampling.eta_stride;
  return std::sqrt(s * std::pow(dx * de, V.grid.dim));
}

}  // namespace

// V_g g(x, eta) for the unit Gaussian has modulus e^{-pi (x^2 + eta^2) / 2}.
TEST(Stft, GaussianOfGaussianModulus) {
  const GridSpec g = GridSpec::make(1, 8.0, 256);
  const Window w = Window::gaussian(g);
  const StftData V = stft(w.signal, w);
  for (std::size_t xi = 0; xi < V.x_count(); xi += 9) {
    const double x = g.node(V.x_index(static_cast<int>(xi)));
    if (std::abs(x) > 4.0) continue;
    for (std::size_t ej = 0; ej < V.eta_count(); ej += 7) {
      const double eta = g.freq(V.eta_index(static_cast<int>(ej)));
      EXPECT_NEAR(std::abs(V.at(xi, ej)), std::exp(-kPi * (x * x + eta * eta) / 2), 1e-12);
    }
  }
}

TEST(Stft, MatchesDirectQuadrature) {
  const GridSpec g = GridSpec::make(1, 8.0, 256);
  const Window w = Window::gaussian(g, 2.0);
  const Signal f = Signal::from_generator(g, gen::random_schwartz(1, 4));
  const StftData V = stft(f, w);
  const double norm = std::pow(4.0, 0.25);  // |e^{-2 pi t^2}|_2^{-1}
  for (int xi : {100, 128, 150}) {
    const double x = g.node(V.x_index(xi));
    for (int ej : {90, 128, 170}) {
      const double eta = g.freq(V.eta_index(ej));
      cplx ref(0.0);
      for (int m = 0; m < 256; ++m) {
        const double t = g.node(m);
        ref += f.samples[m] * norm * std::exp(-2 * kPi * (t - x) * (t - x)) * std::polar(1.0, -2 * kPi * eta * t);
      }
      ref *= g.space_step();
      EXPECT_NEAR(std::abs(V.at(xi, ej) - ref), 0.0, 1e-12);
    }
  }
}

TEST(Stft, OrthogonalityRelation) {
  const GridSpec g = GridSpec::make(1, 16.0, 512);
  const Window w = Window::gaussian(g);
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    const Signal f = Signal::from_generator(g, gen::random_schwartz(1, seed));
    EXPECT_NEAR(stft_l2(stft(f, w)) / oracle::l2(f), 1.0, 1e-10);
  }
}

TEST(Stft, InversionRoundTrip) {
  const GridSpec g = GridSpec::make(1, 16.0, 512);
  const Window w = Window::gaussian(g);
  const Signal f = Signal::from_generator(g, gen::random_schwartz(1, 9));
  EXPECT_LT(relative_l2_error(istft(stft(f, w), w), f), 1e-10);
}

TEST(Stft, StridedSamplingIsSubsetOfDense) {
  const GridSpec g = GridSpec::make(1, 8.0, 256);
  const Window w = Window::gaussian(g);
  const Signal f = Signal::from_generator(g, gen::random_schwartz(1, 2));
  const StftData dense = stft(f, w);
  const StftData coarse = stft(f, w, PhaseSampling::isotropic(g, 0.25));
  ASSERT_EQ(coarse.sampling.x_stride, 4);
  ASSERT_EQ(coarse.sampling.eta_stride, 4);
  for (std::size_t xi = 0; xi < coarse.x_count(); xi += 3)
    for (std::size_t ej = 0; ej < coarse.eta_count(); ej += 5) {
      const int dx = coarse.x_index(static_cast<int>(xi)), de = coarse.eta_index(static_cast<int>(ej));
      EXPECT_NEAR(std::abs(coarse.at(xi, ej) - dense.at(dx, de)), 0.0, 1e-12);
    }
}

TEST(Stft, TwoDimensionalOrthogonality) {
  const GridSpec g = GridSpec::make(2, 4.0, 32);
  const Window w = Window::gaussian(g);
  const Signal f = Signal::from_generator(g, gen::random_schwartz(2, 5, 3, 1.0, 1.0));
  EXPECT_NEAR(stft_l2(stft(f, w)) / lp_norm(f, 2.0), 1.0, 1e-8);
}
