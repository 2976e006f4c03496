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

#ifndef FIOLAB_DYADIC_HPP_
#define FIOLAB_DYADIC_HPP_

#include <utility>
#include <vector>

#include "fiolab/phases.hpp"
#include "fiolab/symbols.hpp"
#include "fiolab/validate.hpp"

namespace fiolab {

// sigma_{j,k}(x, eta) = psi_k(x) sigma(x, eta) psi_j(eta).
SymbolSpec dyadic_piece(const SymbolSpec& s, int j, int k);

// lambda = 2^{(j - k) / 2}
double dyadic_lambda(int j, int k);

struct ConjugatedPiece {
  SymbolSpec symbol;  // sigma_{j,k}(x / lambda, lambda eta)
  PhaseSpec phase;    // Phi(x / lambda, lambda eta)
  double lambda = 1.0;
};

ConjugatedPiece conjugated_piece(const SymbolSpec& piece, const PhaseSpec& phi, int j, int k);

struct SupportReport {
  double C_needed = 0.0;  // smallest C with the sampled support inside V_C
  bool pass = false;
};

// Checks that the sampled support of sigma~_{j,k} lies in
// V_C = { C^-1 2^j <= <lambda eta> <= C 2^j, C^-1 2^k <= <x / lambda> <= C 2^k }.
SupportReport support_in_vc(const ConjugatedPiece& piece, int j, int k, double C = 3.0, int samples = 801);

struct UniformityReport {
  std::vector<std::pair<int, int>> pieces;
  std::vector<double> constants;
  double max_over_min = 0.0;
};

// SG constants of the pieces of s, all j, k <= J, each validated against
// order (m1, m2) = (s.m1, s.m2).
UniformityReport dyadic_uniformity(const SymbolSpec& s, int J, const PhaseBox& box, const SgOptions& opt = {});

// delta_min and sup of the mixed Hessian of Phi_{j,k} over V_C samples.
struct PhaseUniformity {
  std::vector<double> delta_min;
  std::vector<double> hessian_sup;
  double delta_ratio = 0.0;
  double hessian_ratio = 0.0;
};
PhaseUniformity conjugated_phase_uniformity(const PhaseSpec& phi, int J);

}  // namespace fiolab

#endif  // FIOLAB_DYADIC_HPP_
