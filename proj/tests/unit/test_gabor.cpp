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
#include "oracles.hpp"

using namespace fiolab;

namespace {

struct Frame {
  GridSpec g = GridSpec::make(1, 8.0, 256);
  Window w = Window::gaussian(g);
  GaborLattice lat = make_lattice(g, 0.5, 0.5);
};

}  // namespace

TEST(Gabor, AtomIsModulatedTranslate) {
  Frame s;
  const int k = 3, n = -2;
  const Signal atom = gabor_atom(s.w, s.lat, &k, &n);
  const Signal ref = oracle::sample(s.g, [](double t) {
    return std::pow(2.0, 0.25) * std::exp(-kPi * (t - 1.5) * (t - 1.5)) * std::polar(1.0, 2 * kPi * (-1.0) * t);
  });
  EXPECT_LT(oracle::max_abs_diff(atom.samples, ref.samples), 1e-12);
}

TEST(Gabor, AnalysisIsInnerProductWithAtoms) {
  Frame s;
  const Signal f = Signal::from_generator(s.g, gen::random_schwartz(1, 3));
  const GaborCoeffs c = gabor_analysis(f, s.w, s.lat);
  for (int k : {-4, 0, 5})
    for (int n : {-3, 0, 2}) {
      const cplx ref = oracle::inner(f, gabor_atom(s.w, s.lat, &k, &n));
      EXPECT_NEAR(std::abs(c.values[s.lat.flat(&k, &n)] - ref), 0.0, 1e-12);
    }
}

TEST(Gabor, FastFrameOperatorMatchesDirect) {
  Frame s;
  const Signal f = Signal::from_generator(s.g, gen::random_schwartz(1, 8));
  EXPECT_LT(relative_l2_error(frame_operator(f, s.w, s.lat), frame_operator_direct(f, s.w, s.lat)), 1e-12);
}

// Frame bounds bracket the Rayleigh quotients of the frame operator.
TEST(Gabor, FrameBoundsBracketRayleighQuotients) {
  Frame s;
  const FrameBounds fb = frame_bounds(s.w, s.lat);
  ASSERT_TRUE(fb.is_frame);
  EXPECT_NEAR(fb.A + fb.B, 8.0, 0.2);  // redundancy 4, (A + B) / 2 near 4
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const Signal f = Signal::from_generator(s.g, gen::random_schwartz(1, seed));
    const double q = std::real(oracle::inner(frame_operator_direct(f, s.w, s.lat), f)) / std::norm(oracle::l2(f));
    EXPECT_GE(q, fb.A * (1 - 1e-10));
    EXPECT_LE(q, fb.B * (1 + 1e-10));
  }
}

TEST(Gabor, DualWindowReconstructs) {
  Frame s;
  const Window dual = dual_window(s.w, s.lat);
  const Signal f = Signal::from_generator(s.g, gen::random_schwartz(1, 12));
  EXPECT_LT(relative_l2_error(gabor_synthesis(gabor_analysis(f, s.w, s.lat), dual, s.g), f), 1e-8);
}

TEST(Gabor, TightWindowFrameOperatorIsIdentity) {
  Frame s;
  const Window h = tight_window(s.w, s.lat);
  const Signal f = Signal::from_generator(s.g, gen::random_schwartz(1, 21));
  EXPECT_LT(relative_l2_error(frame_operator_direct(f, h, s.lat), f), 1e-8);
}

TEST(Gabor, RadiusRestrictsLattice) {
  Frame s;
  const GaborLattice r = with_radius(s.lat, 3, 2);
  EXPECT_EQ(r.size(), 7u * 5u);
  EXPECT_THROW(with_radius(s.lat, 1000, 1), std::exception);
}
