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

#ifndef FIOLAB_DIFFEO_HPP_
#define FIOLAB_DIFFEO_HPP_

#include <string>

namespace fiolab {

// e^{-1/(1-u^2)} on |u| < 1, zero elsewhere, and its first three derivatives.
double bump_profile(double u);
double bump_profile_d1(double u);
double bump_profile_d2(double u);
double bump_profile_d3(double u);

// phi(t) = t + c s(t), s the standard bump rescaled to (center -/+ width/2).
class Diffeo {
 public:
  Diffeo(double c, double center, double width);

  double c() const { return c_; }
  double center() const { return center_; }
  double width() const { return 2.0 * h_; }

  double phi(double t) const;
  double d1(double t) const;
  double d2(double t) const;
  double d3(double t) const;
  // Safeguarded Newton; |phi(inverse(y)) - y| <= 1e-14 (1 + |y|).
  double inverse(double y) const;
  double inverse_d1(double y) const { return 1.0 / d1(inverse(y)); }

  double min_d1() const { return min_d1_; }
  double max_d1() const { return max_d1_; }
  // A point where phi'' is far from zero; defaults to the bump center.
  double nonlinear_point() const { return center_; }
  std::string describe() const;

 private:
  double c_, center_, h_;
  double min_d1_ = 1.0, max_d1_ = 1.0;
};

// Default library entry: c = 0.3, bump on (0.05, 0.95).
Diffeo make_diffeo(double c, double center = 0.5, double width = 0.9);

// sup |s'| for the unit-width profile, i.e. sup |bump_profile_d1|.
double bump_profile_d1_sup();

}  // namespace fiolab

#endif  // FIOLAB_DIFFEO_HPP_
