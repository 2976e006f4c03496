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

#ifndef FIOLAB_GABOR_MATRIX_HPP_
#define FIOLAB_GABOR_MATRIX_HPP_

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "fiolab/gabor.hpp"
#include "fiolab/phases.hpp"
#include "fiolab/quantize.hpp"

namespace fiolab {

// Sparse <Op g_{k,n}, g_{k',n'}>, columns (k, n), rows (k', n'), both lattice-flat.
struct GaborMatrix {
  GaborLattice lattice;
  std::string window_id;
  std::string operator_id;
  std::vector<std::size_t> col_start;  // size dim() + 1
  std::vector<std::uint32_t> row_index;
  std::vector<cplx> values;

  std::size_t dim() const { return lattice.size(); }
  std::size_t nonzeros() const { return values.size(); }
  cplx at(std::size_t row, std::size_t col) const;
  std::vector<cplx> dense() const;  // row-major
};

// One operator application per column, then gabor_analysis. |entry| < zero_threshold is dropped.
GaborMatrix gabor_matrix(const OperatorHandle& op, const Window& g, const GaborLattice& lat,
                         double zero_threshold = 1e-14);

struct SpotCheck {
  int checked = 0;
  double max_error = 0.0;  // absolute
  bool pass(double tol = 1e-10) const { return checked > 0 && max_error < tol; }
};
// Compares random entries with direct inner products.
SpotCheck gabor_matrix_spot_check(const GaborMatrix& M, const OperatorHandle& op, const Window& g, int count = 32,
                                  std::uint64_t seed = 1);

void write_gabor_matrix_csv(std::ostream& out, const GaborMatrix& M);
// Little-endian records: 4 x int32 (k', n', k, n) then 2 x float64 (re, im).
// For d > 1 the indices are the flattened k and n multi-indices within the lattice box.
void write_gabor_matrix_binary(std::ostream& out, const GaborMatrix& M);
struct Triplet {
  std::int32_t kp, np, k, n;
  cplx value;
};
std::vector<Triplet> read_gabor_matrix_binary(std::istream& in);

struct DecayCertificate {
  double C = 0.0;
  std::size_t worst_row = 0, worst_col = 0;
};
// Smallest C with |M| <= C <n>^{m1} <k'>^{m2} / (<n - n'>^{2 N1} <k - k'>^{2 N2}) in lattice coordinates
// (alpha k, beta n). The Weyl variant uses <n + n'>^{m1} <k + k'>^{m2}.
DecayCertificate diag_decay_certify(const GaborMatrix& M, double m1, double m2, int N1, int N2, bool weyl = false);

struct ConcentrationReport {
  double max_distance = 0.0;  // in lattice cells
  double mean_distance = 0.0;
  std::size_t evaluated = 0;
  std::size_t skipped = 0;
  bool pass() const { return evaluated > 0 && max_distance <= 2.0; }
};
// Column peaks against the canonical relation: y = grad_eta Phi(y', omega), omega' = grad_x Phi(y', omega).
ConcentrationReport fio_kernel_concentration(const GaborMatrix& M, const PhaseSpec& phi, int margin = 2);

// Entries divided by <alpha k'>^{m2} <beta n'>^{m1}; zeros mean no correction.
struct SchurWeights {
  double m1 = 0.0;
  double m2 = 0.0;
};
// [0] sup_n sum_{n'} sup_{k'} sum_k, [1] sup_{n'} sum_n sup_k sum_{k'}, [2] sup_row sum_col, [3] sup_col sum_row.
std::array<double, 4> schur_sums(const GaborMatrix& M, const SchurWeights& w);

struct SchurCertificate {
  std::vector<int> radii;
  std::vector<std::array<double, 4>> sums;
  double max_relative_change = 0.0;
  bool finite = false;
  bool stable = false;     // every sum changes by < 10% between consecutive radii
  bool divergent = false;  // the largest sum grows by > 10% at every step
};
SchurCertificate schur_certify(const std::vector<GaborMatrix>& by_radius, const SchurWeights& w);

}  // namespace fiolab

#endif  // FIOLAB_GABOR_MATRIX_HPP_
