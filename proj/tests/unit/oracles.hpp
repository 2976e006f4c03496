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

// Brute-force reference computations for the unit tests.

#ifndef FIOLAB_TESTS_ORACLES_HPP_
#define FIOLAB_TESTS_ORACLES_HPP_

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "fiolab/grid.hpp"

namespace oracle {

using fiolab::cplx;
using fiolab::kPi;

inline std::vector<cplx> dft(const std::vector<cplx>& x, int sign) {
  const std::size_t n = x.size();
  std::vector<cplx> y(n);
  for (std::size_t k = 0; k < n; ++k) {
    cplx acc(0.0);
    for (std::size_t j = 0; j < n; ++j)
      acc += x[j] * std::polar(1.0, sign * 2.0 * kPi * static_cast<double>((j * k) % n) / static_cast<double>(n));
    y[k] = acc;
  }
  return y;
}

// Riemann sum of f(x) e^{-2 pi i x eta} over the d = 1 grid, at frequency eta.
inline cplx fourier_at(const fiolab::Signal& f, double eta) {
  const auto& g = f.grid;
  cplx acc(0.0);
  for (int m = 0; m < g.samples_per_axis; ++m)
    acc += f.samples[m] * std::polar(1.0, -2.0 * kPi * g.node(m) * eta);
  return acc * g.space_step();
}

// Plain sum over x of |f|^2 dx, d = 1.
inline double l2(const fiolab::Signal& f) {
  double s = 0.0;
  for (const auto& v : f.samples) s += std::norm(v);
  return std::sqrt(s * f.grid.cell_volume());
}

inline cplx inner(const fiolab::Signal& f, const fiolab::Signal& g) {
  cplx s(0.0);
  for (std::size_t i = 0; i < f.size(); ++i) s += f.samples[i] * std::conj(g.samples[i]);
  return s * f.grid.cell_volume();
}

inline fiolab::Signal sample(const fiolab::GridSpec& g, const std::function<cplx(double)>& fn) {
  fiolab::Signal s(g);
  for (int m = 0; m < g.samples_per_axis; ++m) s.samples[m] = fn(g.node(m));
  return s;
}

inline double max_abs_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double e = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) e = std::max(e, std::abs(a[i] - b[i]));
  return e;
}

}  // namespace oracle

#endif  // FIOLAB_TESTS_ORACLES_HPP_
