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

#ifndef FIOLAB_SYMBOLS_HPP_
#define FIOLAB_SYMBOLS_HPP_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fiolab/grid.hpp"

namespace fiolab {

using PointFn = std::function<cplx(const double*)>;

// a(x) b(eta); an empty factor means 1.
struct SeparableTerm {
  PointFn fx;
  PointFn feta;
};

struct PhaseBox {
  double x_max = 16.0;    // |x_i| <= x_max
  double eta_max = 16.0;  // |eta_i| <= eta_max
};

struct SymbolSpec {
  std::string name;
  int dim = 1;
  std::function<cplx(const double* x, const double* eta)> eval;
  double m1 = 0.0;  // order in eta
  double m2 = 0.0;  // order in x
  std::optional<PhaseBox> support_hint;
  int derivative_budget = 3;
  // When non-empty, eval equals the sum of these terms.
  std::vector<SeparableTerm> terms;

  cplx operator()(const double* x, const double* eta) const { return eval(x, eta); }
  bool separable() const { return !terms.empty(); }
  bool x_independent() const;
  bool eta_independent() const;
};

// Builds eval from the terms.
SymbolSpec separable_symbol(std::string name, int d, double m1, double m2, std::vector<SeparableTerm> terms);
SymbolSpec general_symbol(std::string name, int d, double m1, double m2,
                          std::function<cplx(const double*, const double*)> eval);

namespace sym {

SymbolSpec one(int d);
// <eta>^{m1} <x>^{m2}
SymbolSpec model_sg(int d, double m1, double m2);
SymbolSpec multiplier(int d, double m);      // <eta>^m
SymbolSpec space_weight(int d, double m);    // <x>^m
SymbolSpec first_frequency(int d);           // eta_1
SymbolSpec exp_x2(int d);                    // e^{|x|^2}
// G(x) <eta>^{m1}, G(x) = psi0(|x|).
SymbolSpec fio_m1(int d, double m1);
// G(eta) <x>^{m2}.
SymbolSpec fio_m2(int d, double m2);
// psi0(eta) <x>^m.
SymbolSpec lp_cutoff(int d, double m);
// (1 + (x / <x>)(eta / <eta>) / 2) psi0(eta / 8), order (0, 0).
SymbolSpec l2_test(int d);
// Complex conjugate.
SymbolSpec conjugate(const SymbolSpec& s);
// ^t sigma(x, eta) = sigma(eta, x).
SymbolSpec transpose(const SymbolSpec& s);

}  // namespace sym

// "name(a,b,...)" -> name and arguments.
struct RegistryCall {
  std::string name;
  std::vector<double> args;
};
RegistryCall parse_registry_call(const std::string& text);

SymbolSpec symbol_from_registry(const std::string& text, int d = 1);
std::vector<std::string> symbol_registry_names();

}  // namespace fiolab

#endif  // FIOLAB_SYMBOLS_HPP_
