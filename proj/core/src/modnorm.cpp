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

#include "fiolab/modnorm.hpp"

#include <algorithm>
#include <cmath>

#include "fiolab/error.hpp"

namespace fiolab {

const char* to_string(NormMethod m) { return m == NormMethod::DenseStft ? "dense-stft" : "gabor-coeff"; }

namespace {

void require_exponent(double p, const char* what) {
  if (!(p >= 1.0)) throw ValidationError(std::string(what) + ": exponents must lie in [1, inf]");
}

// Accumulates sum |v|^p or max |v|.
struct PowerAcc {
  double p;
  double acc = 0.0;
  void add(double v) {
    if (std::isinf(p))
      acc = std::max(acc, v);
    else
      acc += std::pow(v, p);
  }
  double finish(double cell) const { return std::isinf(p) ? acc : std::pow(acc * cell, 1.0 / p); }
};

}  // namespace

NormReport mod_norm(const Signal& f, double p, double q, const WeightSpec& w, const Window& g,
                    const ModNormOptions& opt) {
  require_exponent(p, "mod_norm");
  require_exponent(q, "mod_norm");
  const GridSpec& G = f.grid;
  const PhaseSampling s = opt.spacing ? PhaseSampling::isotropic(G, *opt.spacing) : PhaseSampling{};
  const int N = G.samples_per_axis, d = G.dim;
  const int ne = sampled_count(N, s.eta_stride), eoff = sampled_offset(N, s.eta_stride);
  std::size_t etot = 1;
  for (int a = 0; a < d; ++a) etot *= static_cast<std::size_t>(ne);

  std::vector<double> eta_w(etot, 1.0);
  if (w.s1 != 0.0) {
    std::vector<double> eta(d);
    for (std::size_t j = 0; j < etot; ++j) {
      std::size_t r = j;
      for (int a = d - 1; a >= 0; --a) {
        eta[a] = G.freq(eoff + static_cast<int>(r % ne) * s.eta_stride);
        r /= ne;
      }
      eta_w[j] = std::pow(japanese(std::span<const double>(eta)), w.s1);
    }
  }

  std::vector<PowerAcc> inner(etot, PowerAcc{p});
  stft_rows(
      f, g, s,
      [&](std::size_t, const double* x, const cplx* row) {
        const double xw = w.s2 != 0.0 ? std::pow(japanese(std::span<const double>(x, d)), w.s2) : 1.0;
        for (std::size_t j = 0; j < etot; ++j) inner[j].add(std::abs(row[j]) * xw * eta_w[j]);
      },
      opt.skip_rel);

  const double hx = std::pow(s.x_stride * G.space_step(), d);
  const double he = std::pow(s.eta_stride * G.freq_step(), d);
  PowerAcc outer{q};
  for (std::size_t j = 0; j < etot; ++j) outer.add(inner[j].finish(hx));

  NormReport rep;
  rep.value = outer.finish(he);
  rep.p = p;
  rep.q = q;
  rep.weight = w;
  rep.method = NormMethod::DenseStft;
  rep.window_id = g.id;
  return rep;
}

double fl_norm(const Signal& f, double p) { return lp_norm(fourier_transform(f), p); }

double seq_norm(const GaborCoeffs& c, double p, double q, const WeightSpec& w) {
  require_exponent(p, "seq_norm");
  require_exponent(q, "seq_norm");
  const GaborLattice& lat = c.lattice;
  const int d = lat.dim;
  const std::size_t nk = lat.k_total(), nn = lat.n_total();
  std::vector<double> kw(nk, 1.0), nw(nn, 1.0);
  std::vector<int> k(d), n(d);
  std::vector<double> z(d);
  for (std::size_t i = 0; i < nk; ++i) {
    lat.unflat(i * nn, k.data(), n.data());
    for (int a = 0; a < d; ++a) z[a] = lat.alpha * k[a];
    kw[i] = std::pow(japanese(std::span<const double>(z)), w.s2);
  }
  for (std::size_t i = 0; i < nn; ++i) {
    lat.unflat(i, k.data(), n.data());
    for (int a = 0; a < d; ++a) z[a] = lat.beta * n[a];
    nw[i] = std::pow(japanese(std::span<const double>(z)), w.s1);
  }
  PowerAcc outer{q};
  for (std::size_t jn = 0; jn < nn; ++jn) {
    PowerAcc inner{p};
    for (std::size_t ik = 0; ik < nk; ++ik) inner.add(std::abs(c.values[ik * nn + jn]) * kw[ik] * nw[jn]);
    outer.add(inner.finish(1.0));
  }
  return outer.finish(1.0);
}

namespace {

RatioInterval make_interval(std::vector<double> r) {
  RatioInterval out;
  if (r.empty()) throw ValidationError("ratio interval: empty corpus");
  out.min = *std::min_element(r.begin(), r.end());
  out.max = *std::max_element(r.begin(), r.end());
  out.ratios = std::move(r);
  return out;
}

}  // namespace

RatioInterval gabor_norm_equivalence_check(const std::vector<Signal>& corpus, double p, double q,
                                           const WeightSpec& w, const Window& g, const GaborLattice& lat,
                                           const ModNormOptions& opt) {
  std::vector<double> r;
  for (const Signal& f : corpus) {
    const double dense = mod_norm(f, p, q, w, g, opt).value;
    if (!(dense > 0.0)) throw NumericalError("norm equivalence: zero signal in corpus");
    r.push_back(seq_norm(gabor_analysis(f, g, lat), p, q, w) / dense);
  }
  return make_interval(std::move(r));
}

RatioInterval window_independence_check(const std::vector<Signal>& corpus, double p, double q,
                                        const WeightSpec& w, const Window& g1, const Window& g2,
                                        const ModNormOptions& opt) {
  std::vector<double> r;
  for (const Signal& f : corpus) {
    const double b = mod_norm(f, p, q, w, g2, opt).value;
    if (!(b > 0.0)) throw NumericalError("window independence: zero signal in corpus");
    r.push_back(mod_norm(f, p, q, w, g1, opt).value / b);
  }
  return make_interval(std::move(r));
}

namespace {

// Fraction of L2 mass outside the central half box.
double outer_mass_fraction(const Signal& f) {
  const GridSpec& G = f.grid;
  const double half = 0.5 * G.half_width;
  double in = 0.0, out = 0.0;
  std::vector<double> x(G.dim);
  for (std::size_t i = 0; i < f.size(); ++i) {
    G.point(i, x.data());
    bool inside = true;
    for (double v : x) inside = inside && std::abs(v) <= half;
    (inside ? in : out) += std::norm(f.samples[i]);
  }
  return in + out > 0.0 ? out / (in + out) : 0.0;
}

}  // namespace

LocalHypothesis detect_local_hypothesis(const Signal& f) {
  if (f.generator) {
    if (f.generator->support) return LocalHypothesis::CompactSupport;
    if (f.generator->band) return LocalHypothesis::BandLimited;
    throw ValidationError("lloc: signal is neither compactly supported nor band-limited (" +
                          f.generator->description + ")");
  }
  if (outer_mass_fraction(f) < 1e-10) return LocalHypothesis::CompactSupport;
  if (outer_mass_fraction(fourier_transform(f)) < 1e-10) return LocalHypothesis::BandLimited;
  throw ValidationError("lloc: signal is neither compactly supported nor band-limited");
}

LlocReport lloc_check(const Signal& f, double p, double q, const Window& g, const ModNormOptions& opt) {
  LlocReport rep;
  rep.hypothesis = detect_local_hypothesis(f);
  rep.mod = mod_norm(f, p, q, WeightSpec{}, g, opt).value;
  rep.other = rep.hypothesis == LocalHypothesis::CompactSupport ? fl_norm(f, q) : lp_norm(f, p);
  if (!(rep.other > 0.0)) throw NumericalError("lloc: zero reference norm");
  rep.ratio = rep.mod / rep.other;
  return rep;
}

LlocSweep lloc_sweep(const Signal& f, double p, double q, const std::vector<double>& shifts, const Window& g,
                     const ModNormOptions& opt) {
  const LocalHypothesis h = detect_local_hypothesis(f);
  LlocSweep out;
  double lo = kInf, hi = 0.0;
  for (double s : shifts) {
    const Signal fs = h == LocalHypothesis::CompactSupport ? modulate(f, s) : translate(f, s);
    LlocReport r = lloc_check(fs, p, q, g, opt);
    r.hypothesis = h;
    lo = std::min(lo, r.ratio);
    hi = std::max(hi, r.ratio);
    out.reports.push_back(r);
  }
  out.variation = hi / lo;
  return out;
}

double mu1(double p) {
  require_exponent(p, "mu1");
  if (p <= 2.0) return -(1.0 - 1.0 / p);
  return -1.0 / p;
}

double mu2(double p) {
  require_exponent(p, "mu2");
  if (p <= 2.0) return -1.0 / p;
  return -(1.0 - 1.0 / p);
}

DilationReport dilation_exponent_check(const Signal& f, double p, const std::vector<double>& lambdas,
                                       const Window& g, const ModNormOptions& opt) {
  if (!f.generator) throw ValidationError("dilation_exponent_check: needs a generator-backed signal");
  if (lambdas.size() < 2) throw ValidationError("dilation_exponent_check: need at least two dilations");
  const bool up = std::all_of(lambdas.begin(), lambdas.end(), [](double l) { return l >= 1.0; });
  const bool down = std::all_of(lambdas.begin(), lambdas.end(), [](double l) { return l <= 1.0; });
  if (!up && !down) throw ValidationError("dilation_exponent_check: sweep must stay on one side of 1");
  std::vector<double> norms;
  for (double l : lambdas) norms.push_back(mod_norm(dilate(f, l), p, p, WeightSpec{}, g, opt).value);
  DilationReport rep;
  rep.fit = fit_growth(lambdas, norms);
  rep.expanding = up;
  const int d = f.grid.dim;
  if (up) {
    rep.bound = d * mu1(p);
    rep.pass = rep.fit.slope <= rep.bound + 0.1;
  } else {
    rep.bound = d * mu2(p);
    rep.pass = rep.fit.slope >= rep.bound - 0.1;
  }
  return rep;
}

}  // namespace fiolab
