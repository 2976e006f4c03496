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

#ifndef FIOLAB_LITTLEWOOD_PALEY_HPP_
#define FIOLAB_LITTLEWOOD_PALEY_HPP_

#include <span>

#include "fiolab/grid.hpp"

namespace fiolab {

// Smooth plateau: 1 on |u| <= 1, 0 on |u| >= 2, e^{-1/t} glue in between.
double psi0(double u);
// psi(u) = psi0(u) - psi0(2u), supported in 1/2 <= |u| <= 2.
double psi(double u);
// psi_0 = psi0, psi_j(z) = psi(2^{-j} z) for j >= 1; |z| is the Euclidean norm.
double psi_j(int j, std::span<const double> z);
double psi_j(int j, double z);

struct LPFamily {
  int j_max = 0;
  double operator()(int j, std::span<const double> z) const { return psi_j(j, z); }
  // Band 2^{j_max} on which the pieces sum to one.
  double resolved_band() const;
};

// Throws ValidationError when 2^{j_max + 1} exceeds the Nyquist band of g.
LPFamily lp_family(int j_max, const GridSpec& g);

// psi_j(D) f and psi_j(x) f.
Signal lp_apply_freq(const Signal& f, int j);
Signal lp_apply_space(const Signal& f, int j);

}  // namespace fiolab

#endif  // FIOLAB_LITTLEWOOD_PALEY_HPP_
