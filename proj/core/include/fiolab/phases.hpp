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

#ifndef FIOLAB_PHASES_HPP_
#define FIOLAB_PHASES_HPP_

#include <functional>
#include <string>
#include <vector>

#include "fiolab/diffeo.hpp"

namespace fiolab {

enum class PhaseStructure {
  General,
  LinearInEta,  // Phi = theta(x) . eta
  LinearInX,    // Phi = x . vartheta(eta)
};

using VecMap = std::function<void(const double* in, double* out)>;
using PhaseFn = std::function<double(const double* x, const double* eta)>;
using PhaseVecFn = std::function<void(const double* x, const double* eta, double* out)>;

struct PhaseSpec {
  std::string name;
  int dim = 1;
  PhaseFn eval;
  PhaseVecFn grad_x;
  PhaseVecFn grad_eta;
  // H[i * d + l] = d^2 Phi / dx_i deta_l
  PhaseVecFn mixed_hessian;
  PhaseStructure structure = PhaseStructure::General;
  // theta for LinearInEta, vartheta for LinearInX.
  VecMap map;

  double operator()(const double* x, const double* eta) const { return eval(x, eta); }
};

namespace phase {

PhaseSpec standard(int d);  // x . eta
// sum_k phi(x_k) eta_k
PhaseSpec xphi(int d, const Diffeo& phi);
// sum_k phi(eta_k) x_k
PhaseSpec phix(int d, const Diffeo& phi);
PhaseSpec zero(int d);
PhaseSpec degenerate(int d);  // (x . eta)^2 / 2
// ^t Phi(x, eta) = Phi(eta, x)
PhaseSpec transpose(const PhaseSpec& p);
PhaseSpec negate(const PhaseSpec& p);
// Phi(x / lambda, lambda eta)
PhaseSpec conjugated(const PhaseSpec& p, double lambda);

}  // namespace phase

PhaseSpec phase_from_registry(const std::string& text, int d = 1);
std::vector<std::string> phase_registry_names();

}  // namespace fiolab

#endif  // FIOLAB_PHASES_HPP_
