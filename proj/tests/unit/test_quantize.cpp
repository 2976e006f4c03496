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
#include "fiolab/phases.hpp"
#include "fiolab/quantize.hpp"
#include "fiolab/symbols.hpp"
#include "oracles.hpp"

using namespace fiolab;

namespace {

const GridSpec kGrid = GridSpec::make(1, 8.0, 512);

// Type II adds the full output band to the input band, hence the finer grid.
const GridSpec kWide = GridSpec::make(1, 8.0, 1024);
// Pseudodifferential checks need no guard; the dense Weyl reference is cubic in N.
const GridSpec kSmall = GridSpec::make(1, 4.0, 64);

Signal input(std::uint64_t seed, const GridSpec& g = kGrid) {
  return Signal::from_generator(g, gen::random_schwartz(1, seed, 3, 1.5, 1.0));
}

// sum_eta e^{2 pi i Phi(x, eta)} sigma(x, eta) f^(eta) d_eta with f^ by direct quadrature.
Signal type1(const PhaseSpec& phi, const SymbolSpec& s, const Signal& f) {
  const GridSpec& g = f.grid;
  const int N = g.samples_per_axis;
  std::vector<cplx> fh(N);
  for (int k = 0; k < N; ++k) fh[k] = oracle::fourier_at(f, g.freq(k));
  Signal out(g);
  for (int m = 0; m < N; ++m) {
    const double x = g.node(m);
    cplx acc(0.0);
    for (int k = 0; k < N; ++k) {
      const double e = g.freq(k);
      acc += std::polar(1.0, 2 * kPi * phi(&x, &e)) * s(&x, &e) * fh[k];
    }
    out.samples[m] = acc * g.freq_step();
  }
  return out;
}

// sum_eta e^{2 pi i x eta} [sum_y e^{-2 pi i Phi(y, eta)} conj(sigma(y, eta)) f(y) dy] d_eta.
Signal type2(const PhaseSpec& phi, const SymbolSpec& s, const Signal& f) {
  const GridSpec& g = f.grid;
  const int N = g.samples_per_axis;
  std::vector<cplx> spec(N);
  for (int k = 0; k < N; ++k) {
    const double e = g.freq(k);
    cplx acc(0.0);
    for (int m = 0; m < N; ++m) {
      const double y = g.node(m);
      acc += std::polar(1.0, -2 * kPi * phi(&y, &e)) * std::conj(s(&y, &e)) * f.samples[m];
    }
    spec[k] = acc * g.space_step();
  }
  Signal out(g);
  for (int m = 0; m < N; ++m) {
    cplx acc(0.0);
    for (int k = 0; k < N; ++k) acc += spec[k] * std::polar(1.0, 2 * kPi * g.node(m) * g.freq(k));
    out.samples[m] = acc * g.freq_step();
  }
  return out;
}

SymbolSpec mixed_symbol() {
  return general_symbol("mixed", 1, 0, 0, [](const double* x, const double* e) {
    return cplx(1.0 / std::sqrt(1 + x[0] * x[0] + e[0] * e[0]), 0.2 * std::sin(x[0] * e[0]));
  });
}

double rel(const Signal& a, const Signal& b) { return relative_l2_error(a, b); }

}  // namespace

TEST(Quantize, KohnNirenbergMatchesDirectSum) {
  const PhaseSpec std1 = phase::standard(1);
  for (const SymbolSpec& s : {sym::model_sg(1, -0.5, -0.5), mixed_symbol(), sym::first_frequency(1)}) {
    const Signal f = input(1);
    const Signal ref = type1(std1, s, f);
    EXPECT_LT(rel(apply_pseudo_kn(s, f), ref), 1e-12) << s.name;
    EXPECT_LT(rel(apply_pseudo_kn_dense(s, f), ref), 1e-12) << s.name;
  }
}

TEST(Quantize, SpaceOnlySymbolIsMultiplication) {
  const Signal f = input(2);
  const SymbolSpec w = sym::space_weight(1, -1.0);
  Signal ref(kGrid);
  for (int m = 0; m < kGrid.samples_per_axis; ++m) ref.samples[m] = f.samples[m] / std::sqrt(1 + std::pow(kGrid.node(m), 2));
  EXPECT_LT(rel(apply_pseudo_kn(w, f), ref), 1e-12);
  EXPECT_LT(rel(apply_weyl(w, f), ref), 1e-12);
}

TEST(Quantize, WeylOfFrequencySymbolIsMultiplier) {
  const Signal f = input(3, kSmall);
  const SymbolSpec m = sym::multiplier(1, 1.0);
  EXPECT_LT(rel(apply_weyl(m, f), apply_pseudo_kn(m, f)), 1e-12);
  EXPECT_LT(rel(apply_weyl_dense(m, f), apply_pseudo_kn(m, f)), 1e-12);
}

TEST(Quantize, WeylFastMatchesDense) {
  const Signal f = input(4, kSmall);
  const SymbolSpec s = sym::model_sg(1, -0.5, 0.5);
  EXPECT_LT(rel(apply_weyl(s, f), apply_weyl_dense(s, f)), 1e-12);
}

TEST(Quantize, StandardPhaseIdentity) {
  const Signal f = input(5);
  EXPECT_LT(rel(apply_fio1(phase::standard(1), sym::one(1), f), f), 1e-13);
  EXPECT_LT(rel(apply_fio2(phase::standard(1), sym::one(1), f), f), 1e-13);
}

TEST(Quantize, FioType1MatchesDirectSum) {
  const PhaseSpec phi = phase_from_registry("phase_xphi(0.3)");
  const Signal f = input(6);
  for (const SymbolSpec& s : {sym::model_sg(1, -0.5, 0.0), mixed_symbol()}) {
    const Signal ref = type1(phi, s, f);
    EXPECT_LT(rel(apply_fio1(phi, s, f), ref), 1e-11) << s.name;
    EXPECT_LT(rel(apply_fio1_dense(phi, s, f), ref), 1e-11) << s.name;
  }
  const PhaseSpec psi = phase_from_registry("phase_phix(0.3)");
  EXPECT_LT(rel(apply_fio1(psi, sym::one(1), f), type1(psi, sym::one(1), f)), 1e-11);
}

TEST(Quantize, FioType2MatchesDirectSum) {
  const Signal f = input(7, kWide);
  for (const char* ph : {"phase_xphi(0.3)", "phase_phix(0.3)"}) {
    const PhaseSpec phi = phase_from_registry(ph);
    for (const SymbolSpec& s : {sym::model_sg(1, 0.0, -0.5), mixed_symbol()}) {
      const Signal ref = type2(phi, s, f);
      EXPECT_LT(rel(apply_fio2(phi, s, f), ref), 1e-11) << ph << " " << s.name;
    }
  }
}

TEST(Quantize, AliasingGuard) {
  const GridSpec g = GridSpec::make(1, 8.0, 256);
  const Signal f = Signal::from_generator(g, gen::random_schwartz(1, 1));
  const PhaseSpec phi = phase_from_registry("phase_xphi(0.3)");
  EXPECT_THROW(apply_fio1(phi, sym::one(1), f), NumericalError);
  ApplyOptions off;
  off.alias_guard = false;
  EXPECT_NO_THROW(apply_fio1(phi, sym::one(1), f, off));
}

TEST(Quantize, HandleValidatesPhase) {
  EXPECT_THROW(OperatorHandle::fio_type1(phase::degenerate(1), sym::one(1), kGrid), ValidationError);
  EXPECT_NO_THROW(OperatorHandle::fio_type1(phase_from_registry("phase_xphi(0.3)"), sym::one(1), kGrid));
}

TEST(Quantize, HandleAdjointsAreAdjoint) {
  const Signal f = input(8, kWide), g = input(9, kWide);
  const double scale = oracle::l2(f) * oracle::l2(g);
  const PhaseSpec phi = phase_from_registry("phase_xphi(0.3)");
  const SymbolSpec s = sym::model_sg(1, -0.5, -0.5);
  for (const OperatorHandle& op :
       {OperatorHandle::pseudo_kn(s, kWide), OperatorHandle::pseudo_weyl(s, kWide), OperatorHandle::fio_type1(phi, s, kWide),
        OperatorHandle::fio_type2(phi, s, kWide), OperatorHandle::composition(sym::multiplier(1, -1), OperatorHandle::fio_type1(phi, s, kWide))}) {
    const cplx lhs = oracle::inner(op.apply(f), g), rhs = oracle::inner(f, op.apply_adjoint(g));
    EXPECT_LT(std::abs(lhs - rhs) / scale, 1e-12) << op.id();
  }
}
