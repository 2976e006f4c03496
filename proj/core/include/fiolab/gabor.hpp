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

#ifndef FIOLAB_GABOR_HPP_
#define FIOLAB_GABOR_HPP_

#include <vector>

#include "fiolab/grid.hpp"
#include "fiolab/stft.hpp"

namespace fiolab {

// Separable lattice alpha Z^d x beta Z^d on the discrete torus of a grid.
struct GaborLattice {
  int dim = 1;
  int N = 0;
  double alpha = 0.5, beta = 0.5;
  int a = 0, b = 0;  // alpha = a dx, beta = b deta
  int K = 0, P = 0;  // translations and modulations per axis: N/a, N/b
  int k_min = 0, k_max = -1;
  int n_min = 0, n_max = -1;

  int k_count() const { return k_max - k_min + 1; }
  int n_count() const { return n_max - n_min + 1; }
  std::size_t k_total() const;
  std::size_t n_total() const;
  std::size_t size() const { return k_total() * n_total(); }
  double redundancy() const;

  // Flat index of (k, n) multi-indices inside the box, k and n absolute.
  std::size_t flat(const int* k, const int* n) const;
  void unflat(std::size_t f, int* k, int* n) const;
};

GaborLattice make_lattice(const GridSpec& g, double alpha, double beta);
// Box [-r, r] per axis for k and n.
GaborLattice with_radius(const GaborLattice& lat, int rk, int rn);

struct GaborCoeffs {
  GaborLattice lattice;
  std::vector<cplx> values;  // flat(k, n) order: k multi-index major
};

GaborCoeffs gabor_analysis(const Signal& f, const Window& g, const GaborLattice& lat);
Signal gabor_synthesis(const GaborCoeffs& c, const Window& g, const GridSpec& grid);

// Atom M_{beta n} T_{alpha k} g with circular translation.
Signal gabor_atom(const Window& g, const GaborLattice& lat, const int* k, const int* n);

// Fast Walnut evaluation (full lattice) and the direct D_g C_g fallback.
Signal frame_operator(const Signal& f, const Window& g, const GaborLattice& lat);
Signal frame_operator_direct(const Signal& f, const Window& g, const GaborLattice& lat);

struct FrameBounds {
  double A = 0.0;
  double B = 0.0;
  bool is_frame = false;
};

FrameBounds frame_bounds(const Window& g, const GaborLattice& lat);

struct CgReport {
  int iterations = 0;
  double residual = 0.0;
};

// gamma = S_g^{-1} g by conjugate gradients (tolerance 1e-10, 500 steps).
Window dual_window(const Window& g, const GaborLattice& lat, CgReport* report = nullptr);
// h = S_g^{-1/2} g, so that S_h = I.
Window tight_window(const Window& g, const GaborLattice& lat);

}  // namespace fiolab

#endif  // FIOLAB_GABOR_HPP_
