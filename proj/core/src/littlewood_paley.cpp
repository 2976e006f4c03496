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

#include "fiolab/littlewood_paley.hpp"

#include <cmath>
#include <vector>

#include "fiolab/error.hpp"

namespace fiolab {

double psi0(double u) {
  u = std::abs(u);
  if (u <= 1.0) return 1.0;
  if (u >= 2.0) return 0.0;
  const double t = u - 1.0;
  const double a = std::exp(-1.0 / (1.0 - t));
  const double b = std::exp(-1.0 / t);
  return a / (a + b);
}

double psi(double u) { return psi0(u) - psi0(2.0 * u); }

double psi_j(int j, double z) {
  if (j < 0) throw ValidationError("psi_j: negative scale");
  return j == 0 ? psi0(z) : psi(std::ldexp(z, -j));
}

double psi_j(int j, std::span<const double> z) {
  double r = 0.0;
  for (double v : z) r += v * v;
  return psi_j(j, std::sqrt(r));
}

double LPFamily::resolved_band() const { return std::ldexp(1.0, j_max); }

LPFamily lp_family(int j_max, const GridSpec& g) {
  if (j_max < 0) throw ValidationError("lp_family: j_max must be non-negative");
  if (std::ldexp(1.0, j_max + 1) > g.nyquist())
    throw ValidationError("lp_family: 2^(j_max+1) exceeds the Nyquist band of " + g.describe());
  return LPFamily{j_max};
}

Signal lp_apply_freq(const Signal& f, int j) {
  Signal F = fourier_transform(f);
  std::vector<double> eta(f.grid.dim);
  for (std::size_t i = 0; i < F.size(); ++i) {
    f.grid.freq_point(i, eta.data());
    F.samples[i] *= psi_j(j, std::span<const double>(eta));
  }
  Signal out = inverse_fourier(F);
  out.generator.reset();
  return out;
}

Signal lp_apply_space(const Signal& f, int j) {
  Signal out(f.grid, f.samples);
  std::vector<double> x(f.grid.dim);
  for (std::size_t i = 0; i < out.size(); ++i) {
    f.grid.point(i, x.data());
    out.samples[i] *= psi_j(j, std::span<const double>(x));
  }
  return out;
}

}  // namespace fiolab
