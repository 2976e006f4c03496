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

#include "fiolab/dyadic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "fiolab/error.hpp"
#include "fiolab/littlewood_paley.hpp"

namespace fiolab {

double dyadic_lambda(int j, int k) { return std::pow(2.0, 0.5 * (j - k)); }

SymbolSpec dyadic_piece(const SymbolSpec& s, int j, int k) {
  if (j < 0 || k < 0) throw ValidationError("dyadic_piece: scales must be non-negative");
  const int d = s.dim;
  const std::string name = "piece(" + s.name + "," + std::to_string(j) + "," + std::to_string(k) + ")";
  auto cx = [d, k](const double* x) { return psi_j(k, std::span<const double>(x, d)); };
  auto ce = [d, j](const double* e) { return psi_j(j, std::span<const double>(e, d)); };
  SymbolSpec out;
  if (s.separable()) {
    std::vector<SeparableTerm> terms;
    for (const auto& t : s.terms) {
      SeparableTerm u;
      u.fx = [cx, f = t.fx](const double* x) { return cx(x) * (f ? f(x) : cplx(1.0)); };
      u.feta = [ce, f = t.feta](const double* e) { return ce(e) * (f ? f(e) : cplx(1.0)); };
      terms.push_back(u);
    }
    out = separable_symbol(name, d, s.m1, s.m2, std::move(terms));
  } else {
    out = general_symbol(name, d, s.m1, s.m2, [cx, ce, e = s.eval](const double* x, const double* eta) {
      return cx(x) * ce(eta) * e(x, eta);
    });
  }
  out.derivative_budget = s.derivative_budget;
  out.support_hint = PhaseBox{std::ldexp(2.0, k), std::ldexp(2.0, j)};
  return out;
}

namespace {

// Symbol z -> s(x / lambda, lambda eta), keeping separability.
SymbolSpec dilate_symbol(const SymbolSpec& s, double lambda) {
  const int d = s.dim;
  auto sx = [d, lambda](const PointFn& f) -> PointFn {
    if (!f) return nullptr;
    return [f, d, lambda](const double* x) {
      double y[4];
      for (int i = 0; i < d; ++i) y[i] = x[i] / lambda;
      return f(y);
    };
  };
  auto se = [d, lambda](const PointFn& f) -> PointFn {
    if (!f) return nullptr;
    return [f, d, lambda](const double* e) {
      double y[4];
      for (int i = 0; i < d; ++i) y[i] = e[i] * lambda;
      return f(y);
    };
  };
  const std::string name = "dilated(" + s.name + ")";
  SymbolSpec out;
  if (s.separable()) {
    std::vector<SeparableTerm> terms;
    for (const auto& t : s.terms) terms.push_back(SeparableTerm{sx(t.fx), se(t.feta)});
    out = separable_symbol(name, d, s.m1, s.m2, std::move(terms));
  } else {
    out = general_symbol(name, d, s.m1, s.m2, [e = s.eval, d, lambda](const double* x, const double* eta) {
      double a[4], b[4];
      for (int i = 0; i < d; ++i) {
        a[i] = x[i] / lambda;
        b[i] = eta[i] * lambda;
      }
      return e(a, b);
    });
  }
  out.derivative_budget = s.derivative_budget;
  if (s.support_hint) out.support_hint = PhaseBox{s.support_hint->x_max * lambda, s.support_hint->eta_max / lambda};
  return out;
}

}  // namespace

ConjugatedPiece conjugated_piece(const SymbolSpec& piece, const PhaseSpec& phi, int j, int k) {
  if (piece.dim > 4) throw ValidationError("conjugated_piece: dimension too large");
  ConjugatedPiece out;
  out.lambda = dyadic_lambda(j, k);
  out.symbol = dilate_symbol(piece, out.lambda);
  out.phase = phase::conjugated(phi, out.lambda);
  return out;
}

SupportReport support_in_vc(const ConjugatedPiece& piece, int j, int k, double C, int samples) {
  const int d = piece.symbol.dim;
  const double lam = piece.lambda;
  const double xr = 1.5 * lam * std::ldexp(2.0, k), er = 1.5 * std::ldexp(2.0, j) / lam;
  std::vector<double> x(d, 0.0), eta(d, 0.0);
  std::vector<double> vals(static_cast<std::size_t>(samples) * samples);
  double vmax = 0.0;
  for (int a = 0; a < samples; ++a)
    for (int b = 0; b < samples; ++b) {
      x[0] = -xr + 2.0 * xr * a / (samples - 1);
      eta[0] = -er + 2.0 * er * b / (samples - 1);
      const double v = std::abs(piece.symbol(x.data(), eta.data()));
      vals[static_cast<std::size_t>(a) * samples + b] = v;
      vmax = std::max(vmax, v);
    }
  SupportReport rep;
  if (vmax == 0.0) {
    rep.pass = true;
    return rep;
  }
  const double tj = std::ldexp(1.0, j), tk = std::ldexp(1.0, k);
  for (int a = 0; a < samples; ++a)
    for (int b = 0; b < samples; ++b) {
      if (vals[static_cast<std::size_t>(a) * samples + b] <= 1e-14 * vmax) continue;
      const double xv = -xr + 2.0 * xr * a / (samples - 1);
      const double ev = -er + 2.0 * er * b / (samples - 1);
      const double je = japanese(lam * ev), jx = japanese(xv / lam);
      rep.C_needed = std::max({rep.C_needed, tj / je, je / tj, tk / jx, jx / tk});
    }
  rep.pass = rep.C_needed <= C;
  return rep;
}

UniformityReport dyadic_uniformity(const SymbolSpec& s, int J, const PhaseBox& box, const SgOptions& opt) {
  UniformityReport rep;
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (int j = 0; j <= J; ++j)
    for (int k = 0; k <= J; ++k) {
      const double c = sg_validate(dyadic_piece(s, j, k), box, opt).C;
      rep.pieces.emplace_back(j, k);
      rep.constants.push_back(c);
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
  rep.max_over_min = hi / lo;
  return rep;
}

PhaseUniformity conjugated_phase_uniformity(const PhaseSpec& phi, int J) {
  PhaseUniformity rep;
  const int d = phi.dim;
  const double us[] = {-2.0, -1.5, -1.0, -0.75, -0.5, 0.5, 0.75, 1.0, 1.5, 2.0};
  for (int j = 0; j <= J; ++j)
    for (int k = 0; k <= J; ++k) {
      const double lam = dyadic_lambda(j, k);
      const PhaseSpec pj = phase::conjugated(phi, lam);
      double dmin = std::numeric_limits<double>::infinity(), hsup = 0.0;
      std::vector<double> x(d, 0.0), eta(d, 0.0), H(static_cast<std::size_t>(d) * d);
      for (double u : us)
        for (double v : us) {
          x[0] = v * std::ldexp(1.0, k) * lam;
          eta[0] = u * std::ldexp(1.0, j) / lam;
          pj.mixed_hessian(x.data(), eta.data(), H.data());
          double det = H[0];
          if (d == 2) det = H[0] * H[3] - H[1] * H[2];
          dmin = std::min(dmin, std::abs(det));
          for (double h : H) hsup = std::max(hsup, std::abs(h));
        }
      rep.delta_min.push_back(dmin);
      rep.hessian_sup.push_back(hsup);
    }
  auto ratio = [](const std::vector<double>& v) {
    return *std::max_element(v.begin(), v.end()) / *std::min_element(v.begin(), v.end());
  };
  rep.delta_ratio = ratio(rep.delta_min);
  rep.hessian_ratio = ratio(rep.hessian_sup);
  return rep;
}

}  // namespace fiolab
