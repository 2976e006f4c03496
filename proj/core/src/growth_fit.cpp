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

#include "fiolab/growth_fit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fiolab/error.hpp"

namespace fiolab {

bool GrowthFit::well_fitted(double r2_min, double flat_ratio) const {
  if (std::isnan(r_squared)) return max_min_ratio <= flat_ratio;
  return r_squared >= r2_min || max_min_ratio <= flat_ratio;
}

GrowthFit fit_growth(const std::vector<double>& params, const std::vector<double>& values) {
  if (params.size() != values.size() || params.size() < 2)
    throw ValidationError("fit_growth: need at least two (parameter, value) pairs");
  GrowthFit fit;
  const std::size_t n = params.size();
  std::vector<double> lx(n), ly(n);
  double vmin = std::numeric_limits<double>::infinity(), vmax = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(params[i] > 0.0) || !(values[i] > 0.0) || !std::isfinite(values[i]))
      throw NumericalError("fit_growth: parameters and values must be positive and finite");
    lx[i] = std::log(params[i]);
    ly[i] = std::log(values[i]);
    vmin = std::min(vmin, values[i]);
    vmax = std::max(vmax, values[i]);
    fit.sweep.emplace_back(params[i], values[i]);
  }
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
    syy += (ly[i] - my) * (ly[i] - my);
  }
  if (!(sxx > 0.0)) throw ValidationError("fit_growth: parameters must not all coincide");
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.max_min_ratio = vmax / vmin;
  if (syy <= 1e-24 * n) {
    fit.r_squared = std::numeric_limits<double>::quiet_NaN();
  } else {
    double rss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double r = ly[i] - (fit.slope * lx[i] + fit.intercept);
      rss += r * r;
    }
    fit.r_squared = 1.0 - rss / syy;
  }
  return fit;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Bounded: return "bounded";
    case Verdict::Unbounded: return "unbounded";
    default: return "inconclusive";
  }
}

const char* to_string(Expectation e) { return e == Expectation::Bounded ? "bounded" : "unbounded"; }

Verdict classify_slope(double slope) {
  if (slope > 0.1) return Verdict::Unbounded;
  if (slope <= 0.05) return Verdict::Bounded;
  return Verdict::Inconclusive;
}

}  // namespace fiolab
