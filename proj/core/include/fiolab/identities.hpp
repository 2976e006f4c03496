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

#ifndef FIOLAB_IDENTITIES_HPP_
#define FIOLAB_IDENTITIES_HPP_

#include <string>
#include <vector>

#include "fiolab/phases.hpp"
#include "fiolab/quantize.hpp"
#include "fiolab/symbols.hpp"

namespace fiolab {

struct IdentityReport {
  std::string name;
  std::vector<double> residuals;  // one per corpus case
  double max_residual = 0.0;
  double tolerance = 1e-8;
  bool pass() const { return max_residual < tolerance; }
};

// |<A f, g> - <f, B g>| / (|f| |g|) over consecutive corpus pairs.
IdentityReport adjoint_identity_check(const PhaseSpec& phi, const SymbolSpec& s, const std::vector<Signal>& corpus,
                                      const ApplyOptions& opt = {});

// Bilinear pairing: (A f, g) against (f, F A_{tPhi, t sigma} F^{-1} g).
IdentityReport transpose_identity_check(const PhaseSpec& phi, const SymbolSpec& s, const std::vector<Signal>& corpus,
                                        const ApplyOptions& opt = {});

struct LinkReport {
  IdentityReport exact;    // B_{-tPhi, sigma*} = F^{-1} A F^{-1}
  IdentityReport literal;  // R B_{-tPhi, sigma*} = F A F^{-1}
  double reflection_gap = 0.0;  // max |B g - F A F^{-1} g| / |B g|
  bool pass() const { return exact.pass() && literal.pass(); }
};
LinkReport link_identity_check(const PhaseSpec& phi, const SymbolSpec& s, const std::vector<Signal>& corpus,
                               const ApplyOptions& opt = {});

// R f(x) = f(-x) on the periodic grid.
Signal reflect(const Signal& f);

// A_{j,k} f against U_lambda A~_{j,k} U_{1/lambda} f. Corpus signals need generators.
IdentityReport dilation_conjugation_check(const PhaseSpec& phi, const SymbolSpec& s,
                                          const std::vector<std::pair<int, int>>& pieces,
                                          const std::vector<Signal>& corpus, const ApplyOptions& opt = {});

struct CompositionReport {
  std::vector<int> js;
  std::vector<double> residuals;  // r_j
  std::vector<double> ratios;     // r_j / r_{j+1}
  double min_ratio = 0.0;
  bool pass = false;              // every ratio >= 1.5
};

// S_0 = FIO with symbol p(x, grad_x Phi(x, eta)) sigma(x, eta).
SymbolSpec leading_symbol(const SymbolSpec& p, const PhaseSpec& phi, const SymbolSpec& s);

// f_j = F^{-1}[psi_j(eta) e^{-2 pi i eta x0}], r_j = |p(x,D) A f_j - S_0 f_j| / |f_j|.
CompositionReport compose_leading(const SymbolSpec& p, const PhaseSpec& phi, const SymbolSpec& s,
                                  const GridSpec& grid, const std::vector<int>& js, double x0 = 0.5,
                                  const ApplyOptions& opt = {});

struct InteractionReport {
  int l = 0;
  std::vector<int> ks;
  std::vector<double> values;  // max over corpus of |psi_l(x) A_k f| / |f|
  int N0 = 0;                  // largest |k - l| with a value above tol
  double tol = 1e-10;
};

// A_k has symbol psi_k(x) sigma(x, eta).
InteractionReport cutoff_interaction_range(const PhaseSpec& phi, const SymbolSpec& s, int l, int k_max,
                                           const std::vector<Signal>& corpus, double tol = 1e-10,
                                           const ApplyOptions& opt = {});

}  // namespace fiolab

#endif  // FIOLAB_IDENTITIES_HPP_
