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

#include "fiolab/diffeo.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fiolab/error.hpp"

namespace fiolab {
namespace {

// q = -1/(1-u^2); derivatives of q at u with w = 1 - u^2.
struct Q {
  double b, q1, q2, q3;
};

bool profile_terms(double u, Q* out) {
  const double w = 1.0 - u * u;
  if (w <= 1e-3) return false;
  out->b = std::exp(-1.0 / w);
  const double w2 = w * w, w3 = w2 * w, w4 = w3 * w;
  out->q1 = -2.0 * u / w2;
  out->q2 = -2.0 / w2 - 8.0 * u * u / w3;
  out->q3 = -24.0 * u / w3 - 48.0 * u * u * u / w4;
  return true;
}

}  // namespace

double bump_profile(double u) {
  const double w = 1.0 - u * u;
  return w > 1e-3 ? std::exp(-1.0 / w) : 0.0;
}

double bump_profile_d1(double u) {
  Q t;
  return profile_terms(u, &t) ? t.b * t.q1 : 0.0;
}

double bump_profile_d2(double u) {
  Q t;
  return profile_terms(u, &t) ? t.b * (t.q2 + t.q1 * t.q1) : 0.0;
}

double bump_profile_d3(double u) {
  Q t;
  return profile_terms(u, &t) ? t.b * (t.q3 + 3.0 * t.q1 * t.q2 + t.q1 * t.q1 * t.q1) : 0.0;
}

double bump_profile_d1_sup() {
  static const double sup = [] {
    double m = 0.0;
    for (int i = 0; i <= 200000; ++i) m = std::max(m, std::abs(bump_profile_d1(-1.0 + i * 1e-5)));
    return m;
  }();
  return sup;
}

Diffeo::Diffeo(double c, double center, double width) : c_(c), center_(center), h_(0.5 * width) {
  if (!(width > 0.0)) throw ValidationError("diffeo: bump width must be positive");
  if (std::abs(c) * bump_profile_d1_sup() / h_ >= 1.0)
    throw ValidationError("diffeo: |c| sup|s'| >= 1, phi is not monotone");
  min_d1_ = max_d1_ = 1.0;
  for (int i = 0; i <= 20000; ++i) {
    const double t = center_ - h_ + 2.0 * h_ * i / 20000.0;
    const double v = d1(t);
    min_d1_ = std::min(min_d1_, v);
    max_d1_ = std::max(max_d1_, v);
  }
}

double Diffeo::phi(double t) const { return t + c_ * bump_profile((t - center_) / h_); }
double Diffeo::d1(double t) const { return 1.0 + c_ * bump_profile_d1((t - center_) / h_) / h_; }
double Diffeo::d2(double t) const { return c_ * bump_profile_d2((t - center_) / h_) / (h_ * h_); }
double Diffeo::d3(double t) const { return c_ * bump_profile_d3((t - center_) / h_) / (h_ * h_ * h_); }

double Diffeo::inverse(double y) const {
  if (c_ == 0.0) return y;
  const double amp = std::abs(c_) * std::exp(-1.0);
  double lo = y - amp - 1e-12, hi = y + amp + 1e-12;
  double t = y;
  for (int it = 0; it < 200; ++it) {
    const double r = phi(t) - y;
    if (std::abs(r) <= 1e-15 * (1.0 + std::abs(y))) return t;
    if (r > 0.0) hi = t; else lo = t;
    double tn = t - r / d1(t);
    if (!(tn > lo && tn < hi)) tn = 0.5 * (lo + hi);
    if (hi - lo < 1e-16 * (1.0 + std::abs(y))) return tn;
    t = tn;
  }
  throw NumericalError("diffeo: inverse did not converge");
}

std::string Diffeo::describe() const {
  std::ostringstream os;
  os << "phi(c=" << c_ << ",center=" << center_ << ",width=" << 2.0 * h_ << ")";
  return os.str();
}

Diffeo make_diffeo(double c, double center, double width) { return Diffeo(c, center, width); }

}  // namespace fiolab
