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

#ifndef FIOLAB_MODNORM_HPP_
#define FIOLAB_MODNORM_HPP_

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "fiolab/gabor.hpp"
#include "fiolab/grid.hpp"
#include "fiolab/growth_fit.hpp"
#include "fiolab/stft.hpp"

namespace fiolab {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class NormMethod { DenseStft, GaborCoeff };
const char* to_string(NormMethod m);

struct NormReport {
  double value = 0.0;
  double p = 2.0, q = 2.0;
  WeightSpec weight;
  NormMethod method = NormMethod::DenseStft;
  std::string window_id;
};

struct ModNormOptions {
  // Isotropic phase-space spacing h (a multiple of dx and deta). Dense when empty.
  std::optional<double> spacing;
  // Rows whose windowed product is below skip_rel |f| |g| count as zero.
  double skip_rel = 0.0;
};

// Mixed norm of V_g f: inner L^p over x, outer L^q over eta, weight
// <x>^{s2} <eta>^{s1}.
NormReport mod_norm(const Signal& f, double p, double q, const WeightSpec& w, const Window& g,
                    const ModNormOptions& opt = {});

double fl_norm(const Signal& f, double p);

// l^{p,q} with weight <alpha k>^{s2} <beta n>^{s1}; inner over k.
double seq_norm(const GaborCoeffs& c, double p, double q, const WeightSpec& w);

struct RatioInterval {
  double min = 0.0, max = 0.0;
  std::vector<double> ratios;
  double spread() const { return max / min; }
};

// seq_norm(C_g f) / mod_norm(f) over a corpus.
RatioInterval gabor_norm_equivalence_check(const std::vector<Signal>& corpus, double p, double q,
                                           const WeightSpec& w, const Window& g, const GaborLattice& lat,
                                           const ModNormOptions& opt = {});

// mod_norm with two windows, same corpus.
RatioInterval window_independence_check(const std::vector<Signal>& corpus, double p, double q,
                                        const WeightSpec& w, const Window& g1, const Window& g2,
                                        const ModNormOptions& opt = {});

enum class LocalHypothesis { CompactSupport, BandLimited };

struct LlocReport {
  LocalHypothesis hypothesis = LocalHypothesis::CompactSupport;
  double mod = 0.0;    // |f|_{M^{p,q}}
  double other = 0.0;  // |f|_{FL^q} or |f|_{L^p}
  double ratio = 0.0;
};

LocalHypothesis detect_local_hypothesis(const Signal& f);
LlocReport lloc_check(const Signal& f, double p, double q, const Window& g, const ModNormOptions& opt = {});

struct LlocSweep {
  std::vector<LlocReport> reports;
  double variation = 0.0;  // max ratio / min ratio
  bool stable() const { return variation < 2.0; }
};

// Modulation sweep M_n f for compact support, translation sweep T_x f for
// band-limited f.
LlocSweep lloc_sweep(const Signal& f, double p, double q, const std::vector<double>& shifts, const Window& g,
                     const ModNormOptions& opt = {});

double mu1(double p);
double mu2(double p);

struct DilationReport {
  GrowthFit fit;
  bool expanding = true;  // lambda >= 1
  double bound = 0.0;     // d mu1 (expanding) or d mu2
  bool pass = false;
};

// Fits log |U_lambda f|_{M^p} against log lambda.
DilationReport dilation_exponent_check(const Signal& f, double p, const std::vector<double>& lambdas,
                                       const Window& g, const ModNormOptions& opt = {});

}  // namespace fiolab

#endif  // FIOLAB_MODNORM_HPP_
