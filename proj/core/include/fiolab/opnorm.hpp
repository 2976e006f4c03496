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

#ifndef FIOLAB_OPNORM_HPP_
#define FIOLAB_OPNORM_HPP_

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "fiolab/modnorm.hpp"
#include "fiolab/quantize.hpp"

namespace fiolab {

enum class NormEstimateMethod { PowerIterL2, CorpusMaxRatio };
const char* to_string(NormEstimateMethod m);

struct OpNormReport {
  NormEstimateMethod method = NormEstimateMethod::PowerIterL2;
  double p = 2.0;
  double lower = 0.0;
  double upper = std::numeric_limits<double>::infinity();  // finite only for converged L2 estimates
  double estimate = 0.0;
  int iterations = 0;
  double residual = 0.0;  // relative Ritz residual of the top eigenpair of A*A
  std::vector<double> ratios;  // corpus ratios
};

struct PowerIterOptions {
  int max_iterations = 1000;
  double tolerance = 1e-4;  // relative, on the norm
  std::uint64_t seed = 1;
};

// Lanczos with full reorthogonalization on A*A. Throws NumericalError without convergence.
OpNormReport op_norm_l2(const OperatorHandle& op, const PowerIterOptions& opt = {});

// max |A f|_{M^p} / |f|_{M^p} over the corpus; a lower bound.
OpNormReport op_norm_corpus(const OperatorHandle& op, double p, const std::vector<Signal>& corpus, const Window& g,
                            const ModNormOptions& mopt = {});

OpNormReport op_norm_estimate(const OperatorHandle& op, double p, NormEstimateMethod method,
                              const std::vector<Signal>& corpus, const Window* g = nullptr,
                              const PowerIterOptions& opt = {});

}  // namespace fiolab

#endif  // FIOLAB_OPNORM_HPP_
