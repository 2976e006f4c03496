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

#ifndef FIOLAB_FD_HPP_
#define FIOLAB_FD_HPP_

#include <functional>
#include <vector>

#include "fiolab/grid.hpp"

namespace fiolab {

// Weights w_i with f^{(m)}(x0) ~ sum w_i f(nodes_i) (Fornberg's recursion).
std::vector<double> fornberg_weights(double x0, const std::vector<double>& nodes, int m);

// Centered fourth-order stencil for the m-th derivative on the integer
// offsets -r..r, r = (m + 1) / 2 + 1. Returns the weights for unit step.
const std::vector<double>& centered_stencil(int m);
int centered_radius(int m);

// Mixed partial derivative of f: R^n -> C at z, with order[i] derivatives in
// variable i and step h[i]. Tensor product of centered stencils.
cplx mixed_partial(const std::function<cplx(const double*)>& f, const std::vector<double>& z,
                   const std::vector<int>& order, const std::vector<double>& h);

}  // namespace fiolab

#endif  // FIOLAB_FD_HPP_
