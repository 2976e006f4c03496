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
#include <random>

#include "fiolab/diffeo.hpp"
#include "fiolab/error.hpp"
#include "fiolab/phases.hpp"
#include "fiolab/symbols.hpp"
#include "fiolab/validate.hpp"

using namespace fiolab;

namespace {

double jp(double z) { return std::sqrt(1 + z * z); }

}  // namespace

TEST(Diffeo, InverseAndDerivatives) {
  const Diffeo phi = make_diffeo(0.3);
  EXPECT_GT(phi.min_d1(), 0.0);
  for (double t = -3.0; t <= 3.0; t += 0.173) {
    EXPECT_NEAR(phi.phi(phi.inverse(t)), t, 1e-13);
    const double h = 1e-5;
    EXPECT_NEAR(phi.d1(t), (phi.phi(t + h) - phi.phi(t - h)) / (2 * h), 1e-7);
    EXPECT_NEAR(phi.d2(t), (phi.d1(t + h) - phi.d1(t - h)) / (2 * h), 1e-6);
  }
  EXPECT_DOUBLE_EQ(phi.phi(7.0), 7.0);
  EXPECT_DOUBLE_EQ(phi.phi(-7.0), -7.0);
  EXPECT_THROW(make_diffeo(5.0), ValidationError);
}

TEST(Symbols, RegistryEvaluatesClosedForms) {
  const double x = 1.7, eta = -2.3;
  EXPECT_NEAR(std::abs(symbol_from_registry("model_sg(-0.5,0.25)")(&x, &eta) - std::pow(jp(eta), -0.5) * std::pow(jp(x), 0.25)),
              0.0, 1e-14);
  EXPECT_NEAR(std::abs(symbol_from_registry("multiplier(1)")(&x, &eta) - jp(eta)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(symbol_from_registry("space_weight(-1)")(&x, &eta) - 1.0 / jp(x)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(symbol_from_registry("first_frequency")(&x, &eta) - eta), 0.0, 1e-14);
  EXPECT_THROW(symbol_from_registry("model_sg(1)"), ValidationError);
  EXPECT_THROW(symbol_from_registry("nope"), ValidationError);
  EXPECT_THROW(symbol_from_registry("multiplier(1"), ValidationError);
}

TEST(Symbols, SeparableTermsSumToEval) {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(-6, 6);
  for (const char* name : {"model_sg(-0.5,-0.5)", "l2_test", "fio_m1(-0.25)", "lp_cutoff(0)"}) {
    const SymbolSpec s = symbol_from_registry(name);
    ASSERT_TRUE(s.separable()) << name;
    for (int i = 0; i < 20; ++i) {
      const double x = u(rng), eta = u(rng);
      cplx sum(0.0);
      for (const auto& t : s.terms) sum += (t.fx ? t.fx(&x) : cplx(1.0)) * (t.feta ? t.feta(&eta) : cplx(1.0));
      EXPECT_NEAR(std::abs(sum - s(&x, &eta)), 0.0, 1e-14) << name;
    }
  }
}

TEST(Symbols, ConjugateAndTranspose) {
  const SymbolSpec s = general_symbol("t", 1, 0, 0, [](const double* x, const double* e) {
    return cplx(x[0], 2 * e[0]);
  });
  const double x = 0.3, e = -1.1;
  EXPECT_EQ(sym::conjugate(s)(&x, &e), std::conj(s(&x, &e)));
  EXPECT_EQ(sym::transpose(s)(&x, &e), s(&e, &x));
}

class PhaseDerivatives : public ::testing::TestWithParam<const char*> {};

TEST_P(PhaseDerivatives, MatchFiniteDifferences) {
  const PhaseSpec p = phase_from_registry(GetParam(), 2);
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-2, 2);
  const double h = 1e-4;
  for (int trial = 0; trial < 10; ++trial) {
    double x[2] = {u(rng), u(rng)}, e[2] = {u(rng), u(rng)};
    double gx[2], ge[2], H[4];
    p.grad_x(x, e, gx);
    p.grad_eta(x, e, ge);
    p.mixed_hessian(x, e, H);
    for (int i = 0; i < 2; ++i) {
      double xp[2] = {x[0], x[1]}, xm[2] = {x[0], x[1]}, ep[2] = {e[0], e[1]}, em[2] = {e[0], e[1]};
      xp[i] += h, xm[i] -= h, ep[i] += h, em[i] -= h;
      EXPECT_NEAR(gx[i], (p(xp, e) - p(xm, e)) / (2 * h), 1e-6);
      EXPECT_NEAR(ge[i], (p(x, ep) - p(x, em)) / (2 * h), 1e-6);
      for (int l = 0; l < 2; ++l) {
        double gp[2], gm[2], el[2] = {e[0], e[1]}, er[2] = {e[0], e[1]};
        el[l] += h, er[l] -= h;
        p.grad_x(x, el, gp);
        p.grad_x(x, er, gm);
        EXPECT_NEAR(H[i * 2 + l], (gp[i] - gm[i]) / (2 * h), 1e-6);
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Registry, PhaseDerivatives,
                         ::testing::Values("standard", "phase_xphi(0.3)", "phase_phix(0.3)", "zero", "degenerate"));

TEST(Phases, TransposeAndNegate) {
  const PhaseSpec p = phase_from_registry("phase_xphi(0.3)");
  const PhaseSpec t = phase::transpose(p), n = phase::negate(p);
  const double x = 0.4, e = 1.3;
  EXPECT_DOUBLE_EQ(t(&x, &e), p(&e, &x));
  EXPECT_DOUBLE_EQ(n(&x, &e), -p(&x, &e));
  const Diffeo phi = make_diffeo(0.3);
  EXPECT_NEAR(p(&x, &e), phi.phi(x) * e, 1e-15);
}

TEST(Validate, NonDegeneracy) {
  const PhaseBox box{8.0, 8.0};
  const NondegReport good = nondeg_validate(phase_from_registry("phase_xphi(0.3)"), box);
  EXPECT_TRUE(good.pass);
  EXPECT_NEAR(good.delta_min, make_diffeo(0.3).min_d1(), 1e-3);
  EXPECT_FALSE(nondeg_validate(phase_from_registry("degenerate"), box).pass);
  EXPECT_FALSE(nondeg_validate(phase_from_registry("zero"), box).pass);
}

TEST(Validate, GrowthCondition) {
  // <0>/<eta> = 1/<eta> drops below 0.05 once |eta| > 20.
  const PhaseBox box{64.0, 64.0};
  EXPECT_TRUE(growth_validate(phase_from_registry("standard"), box).pass);
  EXPECT_FALSE(growth_validate(phase_from_registry("zero"), box).pass);
}

TEST(Validate, SgClassMembership) {
  const PhaseBox box{64.0, 64.0};
  EXPECT_FALSE(sg_validate(symbol_from_registry("model_sg(-0.5,-0.5)"), box).violation);
  EXPECT_FALSE(sg_validate(symbol_from_registry("multiplier(1)"), box).violation);
  EXPECT_TRUE(sg_validate(symbol_from_registry("exp_x2"), PhaseBox{4.0, 4.0}).violation);
}
