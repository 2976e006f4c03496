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

#include "fiolab/identities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fiolab/dyadic.hpp"
#include "fiolab/error.hpp"
#include "fiolab/littlewood_paley.hpp"

namespace fiolab {

namespace {

cplx bilinear(const Signal& a, const Signal& b) {
  require_same_grid(a, b, "bilinear");
  cplx acc(0.0);
  for (std::size_t i = 0; i < a.size(); ++i) acc += a.samples[i] * b.samples[i];
  return acc * a.grid.cell_volume();
}

void finish(IdentityReport& r) {
  r.max_residual = 0.0;
  for (double v : r.residuals) r.max_residual = std::max(r.max_residual, v);
}

void require_corpus(const std::vector<Signal>& corpus, std::size_t min, const char* where) {
  if (corpus.size() < min) throw ValidationError(std::string(where) + ": corpus too small");
}

}  // namespace

IdentityReport adjoint_identity_check(const PhaseSpec& phi, const SymbolSpec& s, const std::vector<Signal>& corpus,
                                      const ApplyOptions& opt) {
  require_corpus(corpus, 2, "adjoint_identity_check");
  IdentityReport r;
  r.name = "adjoint";
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Signal& f = corpus[i];
    const Signal& g = corpus[(i + 1) % corpus.size()];
    const cplx lhs = inner_product(apply_fio1(phi, s, f, opt), g);
    const cplx rhs = inner_product(f, apply_fio2(phi, s, g, opt));
    r.residuals.push_back(std::abs(lhs - rhs) / (lp_norm(f, 2.0) * lp_norm(g, 2.0)));
  }
  finish(r);
  return r;
}

IdentityReport transpose_identity_check(const PhaseSpec& phi, const SymbolSpec& s, const std::vector<Signal>& corpus,
                                        const ApplyOptions& opt) {
  require_corpus(corpus, 2, "transpose_identity_check");
  const PhaseSpec tphi = phase::transpose(phi);
  const SymbolSpec ts = sym::transpose(s);
  IdentityReport r;
  r.name = "transpose";
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Signal& f = corpus[i];
    const Signal& g = corpus[(i + 1) % corpus.size()];
    const cplx lhs = bilinear(apply_fio1(phi, s, f, opt), g);
    const Signal tg = fourier_transform(apply_fio1(tphi, ts, inverse_fourier(g), opt));
    const cplx rhs = bilinear(f, tg);
    r.residuals.push_back(std::abs(lhs - rhs) / (lp_norm(f, 2.0) * lp_norm(g, 2.0)));
  }
  finish(r);
  return r;
}

Signal reflect(const Signal& f) {
  const GridSpec& g = f.grid;
  const int d = g.dim, N = g.samples_per_axis;
  Signal out(g);
  int idx[8];
  for (std::size_t i = 0; i < f.size(); ++i) {
    g.unflatten(i, idx);
    for (int a = 0; a < d; ++a) idx[a] = (N - idx[a]) % N;
    out.samples[g.flatten(idx)] = f.samples[i];
  }
  return out;
}

LinkReport link_identity_check(const PhaseSpec& phi, const SymbolSpec& s, const std::vector<Signal>& corpus,
                               const ApplyOptions& opt) {
  require_corpus(corpus, 1, "link_identity_check");
  const PhaseSpec bphi = phase::negate(phase::transpose(phi));
  const SymbolSpec star = sym::conjugate(sym::transpose(s));
  LinkReport r;
  r.exact.name = "link";
  r.literal.name = "link_literal";
  for (const Signal& g : corpus) {
    const Signal Bg = apply_fio2(bphi, star, g, opt);
    const Signal Ag = apply_fio1(phi, s, inverse_fourier(g), opt);
    const Signal exact = inverse_fourier(Ag);
    const Signal literal = fourier_transform(Ag);
    r.exact.residuals.push_back(relative_l2_error(exact, Bg));
    r.literal.residuals.push_back(relative_l2_error(literal, reflect(Bg)));
    r.reflection_gap = std::max(r.reflection_gap, relative_l2_error(literal, Bg));
  }
  finish(r.exact);
  finish(r.literal);
  return r;
}

IdentityReport dilation_conjugation_check(const PhaseSpec& phi, const SymbolSpec& s,
                                          const std::vector<std::pair<int, int>>& pieces,
                                          const std::vector<Signal>& corpus, const ApplyOptions& opt) {
  require_corpus(corpus, 1, "dilation_conjugation_check");
  IdentityReport r;
  r.name = "dilation_conjugation";
  for (const auto& [j, k] : pieces) {
    const SymbolSpec piece = dyadic_piece(s, j, k);
    const ConjugatedPiece cp = conjugated_piece(piece, phi, j, k);
    const double lam = cp.lambda;
    for (const Signal& f : corpus) {
      if (!f.generator) throw ValidationError("dilation_conjugation_check: corpus signals need generators");
      const int d = f.grid.dim;
      Generator shrunk = *f.generator;
      shrunk.eval = [e = f.generator->eval, d, lam](const double* x) {
        double y[8];
        for (int a = 0; a < d; ++a) y[a] = x[a] / lam;
        return e(y);
      };
      shrunk.support.reset();
      shrunk.band.reset();
      const Signal lhs = apply_fio1(phi, piece, f, opt);
      const Signal u = Signal::from_generator(f.grid, shrunk);
      const Signal rhs = apply_fio1_scaled(cp.phase, cp.symbol, u, lam, opt);
      const double scale = std::max(lp_norm(lhs, 2.0), 1e-3 * lp_norm(f, 2.0));
      Signal diff = linear_combination(1.0, lhs, -1.0, rhs);
      r.residuals.push_back(lp_norm(diff, 2.0) / scale);
    }
  }
  finish(r);
  return r;
}

SymbolSpec leading_symbol(const SymbolSpec& p, const PhaseSpec& phi, const SymbolSpec& s) {
  const int d = s.dim;
  if (p.dim != d || phi.dim != d) throw ValidationError("leading_symbol: dimensions differ");
  return general_symbol("lead(" + p.name + "," + phi.name + "," + s.name + ")", d, p.m1 + s.m1, p.m2 + s.m2,
                        [p, phi, s](const double* x, const double* eta) {
                          double g[8];
                          phi.grad_x(x, eta, g);
                          return p.eval(x, g) * s.eval(x, eta);
                        });
}

CompositionReport compose_leading(const SymbolSpec& p, const PhaseSpec& phi, const SymbolSpec& s,
                                  const GridSpec& grid, const std::vector<int>& js, double x0,
                                  const ApplyOptions& opt) {
  if (js.size() < 2) throw ValidationError("compose_leading: need at least two scales");
  const int d = grid.dim;
  const GridSpec dual = grid.dual();
  const SymbolSpec lead = leading_symbol(p, phi, s);
  CompositionReport r;
  r.js = js;
  for (int j : js) {
    Signal spec(dual);
    std::vector<double> eta(d);
    for (std::size_t i = 0; i < spec.size(); ++i) {
      grid.freq_point(i, eta.data());
      double dot = 0.0;
      for (int a = 0; a < d; ++a) dot += eta[a] * x0;
      spec.samples[i] = psi_j(j, std::span<const double>(eta)) * std::polar(1.0, -kTwoPi * dot);
    }
    const Signal f = inverse_fourier(spec);
    const Signal left = apply_pseudo_kn(p, apply_fio1(phi, s, f, opt));
    const Signal right = apply_fio1(phi, lead, f, opt);
    r.residuals.push_back(lp_norm(linear_combination(1.0, left, -1.0, right), 2.0) / lp_norm(f, 2.0));
  }
  r.min_ratio = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < r.residuals.size(); ++i) {
    const double q = r.residuals[i] / r.residuals[i + 1];
    r.ratios.push_back(q);
    r.min_ratio = std::min(r.min_ratio, q);
  }
  r.pass = r.min_ratio >= 1.5;
  return r;
}

InteractionReport cutoff_interaction_range(const PhaseSpec& phi, const SymbolSpec& s, int l, int k_max,
                                           const std::vector<Signal>& corpus, double tol,
                                           const ApplyOptions& opt) {
  require_corpus(corpus, 1, "cutoff_interaction_range");
  const int d = s.dim;
  InteractionReport r;
  r.l = l;
  r.tol = tol;
  for (int k = 0; k <= k_max; ++k) {
    PointFn cut = [k, d](const double* x) { return cplx(psi_j(k, std::span<const double>(x, d))); };
    SymbolSpec sk;
    if (s.separable()) {
      std::vector<SeparableTerm> terms = s.terms;
      for (auto& t : terms) {
        PointFn fx = t.fx;
        t.fx = fx ? PointFn([fx, cut](const double* x) { return cut(x) * fx(x); }) : cut;
      }
      sk = separable_symbol(s.name + "*psi_" + std::to_string(k) + "(x)", d, s.m1, s.m2, std::move(terms));
    } else {
      sk = general_symbol(s.name + "*psi_" + std::to_string(k) + "(x)", d, s.m1, s.m2,
                          [e = s.eval, cut](const double* x, const double* eta) { return cut(x) * e(x, eta); });
    }
    double worst = 0.0;
    for (const Signal& f : corpus) {
      const Signal v = lp_apply_space(apply_fio1(phi, sk, f, opt), l);
      worst = std::max(worst, lp_norm(v, 2.0) / lp_norm(f, 2.0));
    }
    r.ks.push_back(k);
    r.values.push_back(worst);
    if (worst > tol) r.N0 = std::max(r.N0, std::abs(k - l));
  }
  return r;
}

}  // namespace fiolab
