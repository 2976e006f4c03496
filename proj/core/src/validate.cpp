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

#include "fiolab/validate.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "fiolab/error.hpp"
#include "fiolab/fd.hpp"
#include "fiolab/parallel.hpp"

namespace fiolab {

std::vector<double> sinh_samples(double z_max, int per_side) {
  if (!(z_max > 0.0) || per_side < 1) throw ValidationError("sinh_samples: need z_max > 0 and per_side >= 1");
  const double T = std::asinh(z_max);
  std::vector<double> z;
  for (int i = per_side; i >= 1; --i) z.push_back(-std::sinh(T * i / per_side));
  z.push_back(0.0);
  for (int i = 1; i <= per_side; ++i) z.push_back(std::sinh(T * i / per_side));
  return z;
}

namespace {

// Tensor grid over 2d variables (x then eta).
struct SampleSet {
  int d;
  std::vector<double> xs, es;
  std::size_t count() const {
    std::size_t c = 1;
    for (int i = 0; i < d; ++i) c *= xs.size() * es.size();
    return c;
  }
  void point(std::size_t f, double* x, double* eta) const {
    for (int i = d - 1; i >= 0; --i) {
      eta[i] = es[f % es.size()];
      f /= es.size();
    }
    for (int i = d - 1; i >= 0; --i) {
      x[i] = xs[f % xs.size()];
      f /= xs.size();
    }
  }
};

SampleSet make_samples(int d, const PhaseBox& box, int per_side) {
  if (d == 2) per_side = std::max(3, per_side / 6);
  if (d > 2) throw ValidationError("validators support d = 1, 2");
  return SampleSet{d, sinh_samples(box.x_max, per_side), sinh_samples(box.eta_max, per_side)};
}

void multi_indices(int vars, int total, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == vars) {
    out.push_back(cur);
    return;
  }
  int used = 0;
  for (int v : cur) used += v;
  for (int k = 0; k + used <= total; ++k) {
    cur.push_back(k);
    multi_indices(vars, total, cur, out);
    cur.pop_back();
  }
}

double jap(const double* z, int d) {
  double r = 1.0;
  for (int i = 0; i < d; ++i) r += z[i] * z[i];
  return std::sqrt(r);
}

}  // namespace

std::string SgReport::describe() const {
  std::ostringstream os;
  os << "C=" << C << " C_half=" << C_half << (violation ? " VIOLATION" : " ok");
  return os.str();
}

SgReport sg_validate(const SymbolSpec& s, const PhaseBox& box, const SgOptions& opt) {
  if (!std::isfinite(s.m1) || !std::isfinite(s.m2))
    throw ValidationError("sg_validate: symbol '" + s.name + "' needs finite declared orders");
  if (opt.R < 0 || opt.R > 4) throw ValidationError("sg_validate: derivative budget must lie in [0, 4]");
  const int d = s.dim;
  const SampleSet S = make_samples(d, box, opt.per_side);
  std::vector<std::vector<int>> idx;
  std::vector<int> cur;
  multi_indices(2 * d, opt.R, cur, idx);

  struct Slot {
    double full = 0.0, half = 0.0;
    std::size_t which = 0;
    bool bad = false;
  };
  std::vector<Slot> slots(S.count());
  auto f = [&s, d](const double* z) { return s.eval(z, z + d); };
  parallel_for(S.count(), [&](std::size_t i) {
    std::vector<double> z(2 * d), h(2 * d);
    S.point(i, z.data(), z.data() + d);
    bool in_half = true;
    for (int a = 0; a < d; ++a)
      in_half = in_half && std::abs(z[a]) <= 0.5 * box.x_max && std::abs(z[d + a]) <= 0.5 * box.eta_max;
    for (int a = 0; a < 2 * d; ++a) h[a] = opt.h0 * japanese(z[a]);
    const double jx = jap(z.data(), d), je = jap(z.data() + d, d);
    Slot sl;
    for (std::size_t m = 0; m < idx.size(); ++m) {
      int bx = 0, ae = 0;
      for (int a = 0; a < d; ++a) {
        bx += idx[m][a];
        ae += idx[m][d + a];
      }
      const cplx v = mixed_partial(f, z, idx[m], h);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        sl.bad = true;
        continue;
      }
      const double r = std::abs(v) / (std::pow(je, s.m1 - ae) * std::pow(jx, s.m2 - bx));
      if (r > sl.full) {
        sl.full = r;
        sl.which = m;
      }
      if (in_half) sl.half = std::max(sl.half, r);
    }
    slots[i] = sl;
  });

  SgReport rep;
  std::size_t worst = 0;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (slots[i].bad) throw NumericalError("sg_validate: non-finite symbol evaluation for '" + s.name + "'");
    if (slots[i].full > rep.C) {
      rep.C = slots[i].full;
      worst = i;
    }
    rep.C_half = std::max(rep.C_half, slots[i].half);
  }
  rep.worst_x.assign(d, 0.0);
  rep.worst_eta.assign(d, 0.0);
  S.point(worst, rep.worst_x.data(), rep.worst_eta.data());
  const std::vector<int>& w = idx[slots[worst].which];
  rep.worst_beta.assign(w.begin(), w.begin() + d);
  rep.worst_alpha.assign(w.begin() + d, w.end());
  rep.violation = !std::isfinite(rep.C) || rep.C > 10.0 * rep.C_half;
  return rep;
}

NondegReport nondeg_validate(const PhaseSpec& p, const PhaseBox& box, double delta, int per_side) {
  const int d = p.dim;
  const SampleSet S = make_samples(d, box, per_side);
  std::vector<double> dets(S.count());
  parallel_for(S.count(), [&](std::size_t i) {
    std::vector<double> x(d), eta(d), H(static_cast<std::size_t>(d) * d);
    S.point(i, x.data(), eta.data());
    p.mixed_hessian(x.data(), eta.data(), H.data());
    Eigen::Map<Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> M(H.data(), d, d);
    dets[i] = std::abs(M.determinant());
  });
  NondegReport rep;
  rep.delta_min = std::numeric_limits<double>::infinity();
  std::size_t worst = 0;
  for (std::size_t i = 0; i < dets.size(); ++i)
    if (dets[i] < rep.delta_min) {
      rep.delta_min = dets[i];
      worst = i;
    }
  rep.worst_x.assign(d, 0.0);
  rep.worst_eta.assign(d, 0.0);
  S.point(worst, rep.worst_x.data(), rep.worst_eta.data());

  // Compass search from the worst sample; narrow dips fall between sinh nodes.
  std::vector<double> z(2 * d), lim(2 * d), H(static_cast<std::size_t>(d) * d);
  for (int i = 0; i < d; ++i) {
    z[i] = rep.worst_x[i];
    z[d + i] = rep.worst_eta[i];
    lim[i] = box.x_max;
    lim[d + i] = box.eta_max;
  }
  auto det_at = [&](const std::vector<double>& v) {
    p.mixed_hessian(v.data(), v.data() + d, H.data());
    Eigen::Map<Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> M(H.data(), d, d);
    return std::abs(M.determinant());
  };
  double step = 0.5 * std::max(box.x_max, box.eta_max) / per_side;
  while (step > 1e-9) {
    bool moved = false;
    for (int k = 0; k < 2 * d; ++k)
      for (double sgn : {-1.0, 1.0}) {
        std::vector<double> t = z;
        t[k] = std::clamp(t[k] + sgn * step, -lim[k], lim[k]);
        const double v = det_at(t);
        if (v < rep.delta_min) {
          rep.delta_min = v;
          z = t;
          moved = true;
        }
      }
    if (!moved) step *= 0.5;
  }
  for (int i = 0; i < d; ++i) {
    rep.worst_x[i] = z[i];
    rep.worst_eta[i] = z[d + i];
  }
  rep.pass = rep.delta_min > delta;
  return rep;
}

GrowthReport growth_validate(const PhaseSpec& p, const PhaseBox& box, double c, int per_side) {
  const int d = p.dim;
  const SampleSet S = make_samples(d, box, per_side);
  std::vector<double> rx(S.count()), re(S.count());
  parallel_for(S.count(), [&](std::size_t i) {
    std::vector<double> x(d), eta(d), g(d);
    S.point(i, x.data(), eta.data());
    p.grad_x(x.data(), eta.data(), g.data());
    rx[i] = jap(g.data(), d) / jap(eta.data(), d);
    p.grad_eta(x.data(), eta.data(), g.data());
    re[i] = jap(g.data(), d) / jap(x.data(), d);
  });
  GrowthReport rep;
  rep.ratio_x = *std::min_element(rx.begin(), rx.end());
  rep.ratio_eta = *std::min_element(re.begin(), re.end());
  rep.pass = rep.ratio_x >= c && rep.ratio_eta >= c;
  return rep;
}

double mixed_hessian_sup(const PhaseSpec& p, const PhaseBox& box, int per_side) {
  const int d = p.dim;
  const SampleSet S = make_samples(d, box, per_side);
  std::vector<double> sup(S.count());
  parallel_for(S.count(), [&](std::size_t i) {
    std::vector<double> x(d), eta(d), H(static_cast<std::size_t>(d) * d);
    S.point(i, x.data(), eta.data());
    p.mixed_hessian(x.data(), eta.data(), H.data());
    double m = 0.0;
    for (double v : H) m = std::max(m, std::abs(v));
    sup[i] = m;
  });
  return *std::max_element(sup.begin(), sup.end());
}

}  // namespace fiolab
