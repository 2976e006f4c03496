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

#ifndef FIOLAB_VALIDATE_HPP_
#define FIOLAB_VALIDATE_HPP_

#include <string>
#include <vector>

#include "fiolab/phases.hpp"
#include "fiolab/symbols.hpp"

namespace fiolab {

// Per-axis samples z = +-sinh(t), t uniform, up to z_max (plus zero).
std::vector<double> sinh_samples(double z_max, int per_side);

struct SgOptions {
  int R = 3;           // total derivative order |alpha| + |beta|
  int per_side = 48;   // sinh samples per half axis (d = 1)
  double h0 = 0.05;    // local step h0 <z>
};

struct SgReport {
  double C = 0.0;       // on the full box
  double C_half = 0.0;  // on the half box
  std::vector<double> worst_x, worst_eta;
  std::vector<int> worst_alpha, worst_beta;
  bool violation = false;  // C > 10 C_half
  std::string describe() const;
};

// Smallest C with |d^alpha_eta d^beta_x sigma| <= C <eta>^{m1-|alpha|} <x>^{m2-|beta|}.
SgReport sg_validate(const SymbolSpec& s, const PhaseBox& box, const SgOptions& opt = {});

struct NondegReport {
  double delta_min = 0.0;
  std::vector<double> worst_x, worst_eta;
  bool pass = false;
};

NondegReport nondeg_validate(const PhaseSpec& p, const PhaseBox& box, double delta = 1e-3, int per_side = 24);

struct GrowthReport {
  double ratio_x = 0.0;    // min <grad_x Phi> / <eta>
  double ratio_eta = 0.0;  // min <grad_eta Phi> / <x>
  bool pass = false;
};

GrowthReport growth_validate(const PhaseSpec& p, const PhaseBox& box, double c = 0.05, int per_side = 24);

// max |mixed Hessian entry| and max |d^alpha grad| bounded checks for |alpha|=|beta|=1.
double mixed_hessian_sup(const PhaseSpec& p, const PhaseBox& box, int per_side = 24);

}  // namespace fiolab

#endif  // FIOLAB_VALIDATE_HPP_
