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

#ifndef FIOLAB_SHARPNESS_HPP_
#define FIOLAB_SHARPNESS_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fiolab/diffeo.hpp"
#include "fiolab/grid.hpp"
#include "fiolab/growth_fit.hpp"

namespace fiolab {

// f_n = chi(t) e^{2 pi i n t}, chi = bump on [lo, hi]; the tensor power for d = 2.
Generator make_fn(double n, int d = 1, double lo = 0.0, double hi = 1.0);
Signal make_fn(const GridSpec& g, double n, double lo = 0.0, double hi = 1.0);

struct SweepConfig {
  std::vector<double> ns{16, 32, 64, 128, 256};
  double c = 0.3;  // diffeomorphism amplitude; 0 is the identity
  double center = 0.5;
  double width = 0.9;
  double chi_lo = 0.0;
  double chi_hi = 1.0;
  std::optional<GridSpec> grid;  // experiment default when empty
  double spacing = 0.125;        // phase-space spacing for M^p norms
  Diffeo diffeo() const { return make_diffeo(c, center, width); }
};

struct SweepRow {
  std::string family;
  double n = 0.0;
  double norm_in = 0.0;
  double norm_out = 0.0;
  double ratio = 0.0;
};

struct ExperimentResult {
  std::string name;
  std::string criterion;
  GridSpec grid;
  std::vector<SweepRow> rows;
  std::vector<std::pair<std::string, GrowthFit>> fits;  // one per witness family
  GrowthFit fit;                                        // the deciding fit (largest slope)
  std::optional<ThresholdVerdict> verdict;
  bool pass = false;
};

// Default grids.
GridSpec fl_growth_grid(int d = 1);
GridSpec modulation_grid();  // L = 4, N = 16384
GridSpec lp_grid();          // L = 1024, N = 8192

// |f_n o phi|_{FL^p}; pass iff slope >= d (1/p - 1/2) - 0.1, or |slope| <= 0.05 when p = 2 or phi is the identity.
ExperimentResult fl_growth_experiment(double p, const SweepConfig& cfg, int d = 1);

// |<D>^m f_n|_{M^p} / |f_n|_{M^p}; pass iff slope <= m + 0.1.
ExperimentResult multiplier_growth_check(double m, double p, const SweepConfig& cfg);

// A with phase phi(eta) x and symbol <x>^m psi0(eta) on L^p, witnesses F^{-1} f_n and F^{-1}[(f_n o phi) phi'].
// Requires 2 < p < infinity; bounded iff m <= -(1/2 - 1/p).
ExperimentResult theorem_mo_experiment(double m, double p, const SweepConfig& cfg);
// Same operator for any p; bounded iff m <= -d |1/2 - 1/p|.
ExperimentResult casolp_experiment(double m, double p, const SweepConfig& cfg);

// A with phase phi(x) eta and symbol G(x) <eta>^{m1} on inputs <D>^{-m1} f_n; bounded iff m1 <= -(1/p - 1/2).
ExperimentResult sharpness_m1_experiment(double m1, double p, const SweepConfig& cfg);
// B_{-tPhi, sigma*} on the dual grid with inputs F <D>^{-m2} f_n; bounded iff m2 <= -(1/p - 1/2).
ExperimentResult sharpness_m2_experiment(double m2, double p, const SweepConfig& cfg);
// max |r_m2 - r_m1| / r_m1 over matching sweep points.
double fourier_consistency(const ExperimentResult& m1, const ExperimentResult& m2);

struct SuiteCase {
  double m1 = -0.5;
  double m2 = -0.5;
  std::string phase = "phase_xphi(0.3)";
};
struct SuiteReport {
  double p = 1.0;
  std::vector<SuiteCase> cases;
  std::vector<ExperimentResult> results;
  std::vector<double> corpus_max_ratio;
  bool pass = false;
};
// Model symbols <eta>^{m1} <x>^{m2} at the threshold: every witness slope must be <= 0.05.
SuiteReport main_theorem_boundedness_suite(double p, const std::vector<SuiteCase>& cases, const SweepConfig& cfg);

// d |1/2 - 1/p|.
double threshold_gap(double p, int d = 1);

}  // namespace fiolab

#endif  // FIOLAB_SHARPNESS_HPP_
