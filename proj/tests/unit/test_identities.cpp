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
#include "fiolab/identities.hpp"
#include "fiolab/phases.hpp"
#include "fiolab/symbols.hpp"
#include "oracles.hpp"

using namespace fiolab;

namespace {

std::vector<Signal> corpus(const GridSpec& g, int n) {
  std::vector<Signal> c;
  for (int s = 1; s <= n; ++s) c.push_back(Signal::from_generator(g, gen::random_schwartz(1, 40 + s, 4, 1.5, 1.5)));
  return c;
}

}  // namespace

TEST(Identities, AdjointTransposeLink) {
  const GridSpec g = GridSpec::make(1, 16.0, 2048);
  const PhaseSpec phi = phase_from_registry("phase_xphi(0.3)");
  const SymbolSpec s = sym::l2_test(1);
  const auto c = corpus(g, 3);
  EXPECT_TRUE(adjoint_identity_check(phi, s, c).pass());
  EXPECT_TRUE(transpose_identity_check(phi, s, c).pass());
  const LinkReport link = link_identity_check(phi, s, c);
  EXPECT_TRUE(link.pass());
  EXPECT_GT(link.reflection_gap, 1e-3);  // the unreflected form is not an identity
}

TEST(Identities, ReflectionIsInvolutive) {
  const GridSpec g = GridSpec::make(1, 4.0, 64);
  const Signal f = Signal::from_generator(g, gen::random_schwartz(1, 3));
  EXPECT_EQ(reflect(reflect(f)).samples, f.samples);
  const Signal r = reflect(f);
  for (int m = 1; m < 64; ++m) EXPECT_EQ(r.samples[m], f.samples[64 - m]);
}

TEST(Identities, LeadingSymbolComposesAtGradient) {
  const PhaseSpec phi = phase_from_registry("phase_xphi(0.3)");
  const SymbolSpec p = sym::multiplier(1, 1.0), s = sym::model_sg(1, -0.5, 0.0);
  const SymbolSpec lead = leading_symbol(p, phi, s);
  const Diffeo d = make_diffeo(0.3);
  for (double x : {-1.0, 0.3, 0.6, 2.0})
    for (double e : {-4.0, 0.5, 3.0}) {
      const double gx = d.d1(x) * e;
      EXPECT_NEAR(std::abs(lead(&x, &e) - std::sqrt(1 + gx * gx) / std::sqrt(std::sqrt(1 + e * e))), 0.0, 1e-14);
    }
}

// The symbol cutoff psi_k(x) acts at the output point, so psi_l A_k = 0 for |k - l| >= 2.
TEST(Identities, CutoffInteractionRange) {
  const GridSpec g = GridSpec::make(1, 32.0, 1024);
  const PhaseSpec phi = phase_from_registry("phase_xphi(0.3)");
  std::vector<Signal> c;
  for (double x0 : {0.0, 3.0, 10.0}) c.push_back(Signal::from_generator(g, gen::gaussian(1, 0.2, {x0})));
  const InteractionReport r = cutoff_interaction_range(phi, sym::model_sg(1, -0.5, -0.5), 2, 4, c);
  EXPECT_LE(r.N0, 1);
  EXPECT_GT(r.values[2], 1e-3);
}
