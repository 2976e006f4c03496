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

#ifndef FIOLAB_QUANTIZE_HPP_
#define FIOLAB_QUANTIZE_HPP_

#include <memory>
#include <optional>
#include <string>

#include "fiolab/grid.hpp"
#include "fiolab/phases.hpp"
#include "fiolab/symbols.hpp"

namespace fiolab {

struct ApplyOptions {
  bool alias_guard = true;
  double alias_fraction = 0.9;   // of the Nyquist frequency
  double active_fraction = 1e-12;  // input samples below this times the max are ignored by the guard
};

// p(x, D) f. Separable symbols use the FFT path, others the dense sum.
Signal apply_pseudo_kn(const SymbolSpec& p, const Signal& f);
Signal apply_pseudo_kn_dense(const SymbolSpec& p, const Signal& f);
// p(x, D)^* f, the type II operator with phase x . eta (an exact DFT, never aliased).
Signal apply_pseudo_kn_adjoint(const SymbolSpec& p, const Signal& f);

// Weyl quantization with midpoint symbol argument.
Signal apply_weyl(const SymbolSpec& p, const Signal& f);
Signal apply_weyl_dense(const SymbolSpec& p, const Signal& f);

// A f(x) = sum_eta e^{2 pi i Phi(x, eta)} sigma(x, eta) f^(eta) deta.
Signal apply_fio1(const PhaseSpec& phi, const SymbolSpec& s, const Signal& f, const ApplyOptions& opt = {});
// (A f)(mu x) on the nodes x of f's grid, i.e. U_mu A f.
Signal apply_fio1_scaled(const PhaseSpec& phi, const SymbolSpec& s, const Signal& f, double mu,
                         const ApplyOptions& opt = {});
// Reference dense evaluation, no fast paths.
Signal apply_fio1_dense(const PhaseSpec& phi, const SymbolSpec& s, const Signal& f);

// (B f)^(eta) = sum_x e^{-2 pi i Phi(x, eta)} conj(sigma(x, eta)) f(x) dx, then F^{-1}.
Signal apply_fio2(const PhaseSpec& phi, const SymbolSpec& s, const Signal& f, const ApplyOptions& opt = {});
Signal apply_fio2_dense(const PhaseSpec& phi, const SymbolSpec& s, const Signal& f);

// Largest |d_x Phi| component over the active part of (grid x supp sigma), scaled by mu.
// Type II adds the band of the input; the guard then compares against 2 x Nyquist.
double max_space_frequency(const PhaseSpec& phi, const SymbolSpec& s, const Signal& f, bool type2,
                           double mu = 1.0, double active_fraction = 1e-12);

enum class OperatorKind { PseudoKN, PseudoWeyl, FioType1, FioType2, Composition };
const char* to_string(OperatorKind k);

class OperatorHandle {
 public:
  static OperatorHandle pseudo_kn(const SymbolSpec& p, const GridSpec& g);
  static OperatorHandle pseudo_weyl(const SymbolSpec& p, const GridSpec& g);
  // Validates the phase (non-degeneracy and growth) on the grid's box.
  static OperatorHandle fio_type1(const PhaseSpec& phi, const SymbolSpec& s, const GridSpec& g);
  static OperatorHandle fio_type2(const PhaseSpec& phi, const SymbolSpec& s, const GridSpec& g);
  // p(x, D) after inner.
  static OperatorHandle composition(const SymbolSpec& p, const OperatorHandle& inner);

  Signal apply(const Signal& f) const;
  Signal apply_adjoint(const Signal& f) const;

  OperatorKind kind() const { return kind_; }
  const SymbolSpec& symbol() const { return symbol_; }
  const std::optional<PhaseSpec>& phase() const { return phase_; }
  const GridSpec& grid() const { return grid_; }
  std::string id() const;
  ApplyOptions options;

 private:
  OperatorKind kind_ = OperatorKind::PseudoKN;
  SymbolSpec symbol_;
  std::optional<PhaseSpec> phase_;
  GridSpec grid_;
  std::shared_ptr<const OperatorHandle> inner_;
};

}  // namespace fiolab

#endif  // FIOLAB_QUANTIZE_HPP_
