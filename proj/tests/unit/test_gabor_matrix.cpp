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
#include <sstream>

#include "fiolab/gabor_matrix.hpp"
#include "fiolab/phases.hpp"
#include "fiolab/symbols.hpp"
#include "oracles.hpp"

using namespace fiolab;

namespace {

struct Fixture {
  GridSpec g = GridSpec::make(1, 8.0, 256);
  Window w = Window::gaussian(g);
  GaborLattice lat = with_radius(make_lattice(g, 0.5, 0.5), 6, 6);
};

}  // namespace

// For the identity, |<g_{k,n}, g_{k',n'}>| = e^{-pi (alpha^2 dk^2 + beta^2 dn^2) / 2}.
TEST(GaborMatrix, IdentityIsGaussianGram) {
  Fixture s;
  const GaborMatrix M = gabor_matrix(OperatorHandle::pseudo_kn(sym::one(1), s.g), s.w, s.lat);
  int k[1], n[1], kp[1], np[1];
  for (std::size_t col = 0; col < M.dim(); col += 11)
    for (std::size_t row = 0; row < M.dim(); row += 7) {
      s.lat.unflat(col, k, n);
      s.lat.unflat(row, kp, np);
      const double dk = 0.5 * (k[0] - kp[0]), dn = 0.5 * (n[0] - np[0]);
      EXPECT_NEAR(std::abs(M.at(row, col)), std::exp(-kPi * (dk * dk + dn * dn) / 2), 1e-12);
    }
}

TEST(GaborMatrix, EntriesAreAtomPairings) {
  Fixture s;
  const OperatorHandle op = OperatorHandle::pseudo_kn(sym::model_sg(1, -0.5, -0.5), s.g);
  const GaborMatrix M = gabor_matrix(op, s.w, s.lat);
  for (auto [col, row] : {std::pair<std::size_t, std::size_t>{0, 0}, {20, 25}, {84, 90}, {168, 100}}) {
    int k[1], n[1], kp[1], np[1];
    s.lat.unflat(col, k, n);
    s.lat.unflat(row, kp, np);
    const cplx ref = oracle::inner(op.apply(gabor_atom(s.w, s.lat, k, n)), gabor_atom(s.w, s.lat, kp, np));
    EXPECT_NEAR(std::abs(M.at(row, col) - ref), 0.0, 1e-12);
  }
  EXPECT_TRUE(gabor_matrix_spot_check(M, op, s.w, 16, 3).pass());
}

TEST(GaborMatrix, BinaryRoundTrip) {
  Fixture s;
  const GaborMatrix M = gabor_matrix(OperatorHandle::pseudo_kn(sym::one(1), s.g), s.w, s.lat, 1e-6);
  std::stringstream buf;
  write_gabor_matrix_binary(buf, M);
  EXPECT_EQ(buf.str().size(), M.nonzeros() * 32);
  const auto trips = read_gabor_matrix_binary(buf);
  ASSERT_EQ(trips.size(), M.nonzeros());
  for (std::size_t i = 0; i < trips.size(); i += 13) {
    const int k[1] = {trips[i].k}, n[1] = {trips[i].n}, kp[1] = {trips[i].kp}, np[1] = {trips[i].np};
    EXPECT_EQ(trips[i].value, M.at(s.lat.flat(kp, np), s.lat.flat(k, n)));
  }
  std::stringstream csv;
  write_gabor_matrix_csv(csv, M);
  EXPECT_EQ(csv.str().rfind("# schema=1\n", 0), 0u);
}

TEST(GaborMatrix, DecayCertificateAndSchur) {
  Fixture s;
  std::vector<GaborMatrix> byr;
  const OperatorHandle op = OperatorHandle::pseudo_kn(sym::model_sg(1, -0.5, -0.5), s.g);
  for (int r : {4, 6, 8}) byr.push_back(gabor_matrix(op, s.w, with_radius(make_lattice(s.g, 0.5, 0.5), r, r)));
  const DecayCertificate c = diag_decay_certify(byr.back(), -0.5, -0.5, 1, 1);
  EXPECT_TRUE(std::isfinite(c.C));
  EXPECT_GT(c.C, 0.5);
  const SchurCertificate sc = schur_certify(byr, SchurWeights{-0.5, -0.5});
  EXPECT_TRUE(sc.finite);
  EXPECT_TRUE(sc.stable);
  EXPECT_FALSE(sc.divergent);
}

TEST(GaborMatrix, FioConcentratesOnCanonicalGraph) {
  const GridSpec g = GridSpec::make(1, 16.0, 1024);
  const Window w = Window::gaussian(g);
  const PhaseSpec phi = phase_from_registry("phase_xphi(0.3)");
  const GaborMatrix M = gabor_matrix(OperatorHandle::fio_type1(phi, sym::model_sg(1, -0.5, -0.5), g), w,
                                     with_radius(make_lattice(g, 0.5, 0.5), 8, 8));
  const ConcentrationReport r = fio_kernel_concentration(M, phi);
  EXPECT_TRUE(r.pass()) << r.max_distance;
}
