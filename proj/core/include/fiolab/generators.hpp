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

#ifndef FIOLAB_GENERATORS_HPP_
#define FIOLAB_GENERATORS_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fiolab/grid.hpp"

namespace fiolab::gen {

// e^{-pi a |t - x0|^2} e^{2 pi i eta0 . t}; empty x0/eta0 mean zero.
Generator gaussian(int d, double a = 1.0, std::vector<double> x0 = {}, std::vector<double> eta0 = {});

// Standard bump e^{-1/(1-u^2)} rescaled to (lo, hi); d=1.
Generator bump(double lo = 0.0, double hi = 1.0);

// chi(t) e^{2 pi i n t} with chi = bump(lo, hi); d=1.
Generator modulated_bump(double n, double lo = 0.0, double hi = 1.0);

// (sin(pi b t) / (pi b t))^2, band-limited to |eta| <= b; d=1.
Generator fejer(double b);

// Product f_1(t_1) ... f_d(t_d) of one-dimensional generators.
Generator tensor(const std::vector<Generator>& factors);

// Same generator applied to every axis: f(t_1) ... f(t_d).
Generator tensor_power(const Generator& f, int d);

// t -> f(phi(t)) per axis (phi acts on each coordinate).
Generator compose(const Generator& f, const std::function<double(double)>& phi, const std::string& what, int d);

// Sum of a few random modulated, translated Gaussians.
Generator random_schwartz(int d, std::uint64_t seed, int terms = 4, double spread_x = 3.0, double spread_eta = 3.0);

}  // namespace fiolab::gen

#endif  // FIOLAB_GENERATORS_HPP_
