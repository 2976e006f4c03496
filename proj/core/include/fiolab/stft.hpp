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

#ifndef FIOLAB_STFT_HPP_
#define FIOLAB_STFT_HPP_

#include <functional>
#include <string>
#include <vector>

#include "fiolab/grid.hpp"

namespace fiolab {

struct Window {
  Signal signal;
  double l2_norm = 0.0;
  std::string id;
  // One-dimensional factors of a separable window (one per axis).
  std::vector<Signal> factors;

  // Gaussian e^{-pi a |t|^2}, normalized to unit L2 norm.
  static Window gaussian(const GridSpec& g, double a = 1.0);
  static Window from_signal(const Signal& s, const std::string& id, bool normalize = true);
  static Window separable(const std::vector<Signal>& factors, const std::string& id);
};

// Phase-space sampling: x-nodes m = N/2 mod s + i s, likewise for eta.
struct PhaseSampling {
  int x_stride = 1;
  int eta_stride = 1;
  static PhaseSampling isotropic(const GridSpec& g, double h);
};

struct StftData {
  GridSpec grid;
  PhaseSampling sampling;
  int nx = 0;    // sampled x-nodes per axis
  int neta = 0;  // sampled eta-nodes per axis
  std::vector<cplx> values;  // [x multi-index][eta multi-index]
  std::string window_id;

  std::size_t x_count() const;
  std::size_t eta_count() const;
  int x_index(int i) const;    // grid node index of i-th sampled x
  int eta_index(int j) const;  // storage index of j-th sampled eta
  cplx at(std::size_t xi, std::size_t ej) const { return values[xi * eta_count() + ej]; }
};

// Number of sampled nodes and their offset for stride s on N nodes.
int sampled_count(int N, int s);
int sampled_offset(int N, int s);

StftData stft(const Signal& f, const Window& g, PhaseSampling s = {});

// Streams rows V_g f(x, .) in x order. Rows are computed in parallel
// batches and delivered sequentially. Rows whose windowed product has L2
// norm below skip_rel * |f|_2 |g|_2 are delivered as zeros.
void stft_rows(const Signal& f, const Window& g, PhaseSampling s,
               const std::function<void(std::size_t xi, const double* x, const cplx* row)>& sink,
               double skip_rel = 0.0);

// Riemann-sum inversion; needs eta_stride = 1 and a unit-norm window.
Signal istft(const StftData& F, const Window& g, double* boundary_mass = nullptr);

// L2 mass fraction of the window within one unit of the box edge.
double window_boundary_mass(const Window& g);

}  // namespace fiolab

#endif  // FIOLAB_STFT_HPP_
