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

#include "fiolab/sharpness.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fiolab/error.hpp"
#include "fiolab/generators.hpp"
#include "fiolab/modnorm.hpp"
#include "fiolab/parallel.hpp"
#include "fiolab/phases.hpp"
#include "fiolab/quantize.hpp"
#include "fiolab/stft.hpp"
#include "fiolab/symbols.hpp"

namespace fiolab {

namespace {

std::string num(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

void require_sweep(const SweepConfig& cfg, const char* where) {
  if (cfg.ns.size() < 5) throw ValidationError(std::string(where) + ": the n-sweep needs at least 5 points");
  for (double n : cfg.ns)
    if (!(n > 0.0)) throw ValidationError(std::string(where) + ": sweep values must be positive");
}

void require_band(const GridSpec& g, double n, double stretch, const char* where) {
  if (n * stretch > 0.9 * g.nyquist()) {
    std::ostringstream os;
    os << where << ": modulation " << n << " (x " << stretch << " after the phase map) leaves 0.9 x Nyquist "
       << g.nyquist() << " on " << g.describe();
    throw NumericalError(os.str());
  }
}

double mp_norm(const Signal& f, double p, const Window& w, double h) {
  ModNormOptions opt;
  opt.spacing = h;
  return mod_norm(f, p, p, {}, w, opt).value;
}

GrowthFit fit_rows(const std::vector<SweepRow>& rows, const std::string& family, bool use_ratio = true) {
  std::vector<double> ns, vs;
  for (const auto& r : rows)
    if (r.family == family) {
      ns.push_back(r.n);
      vs.push_back(use_ratio ? r.ratio : r.norm_out);
    }
  return fit_growth(ns, vs);
}

// Deciding fit = largest slope over the families.
void decide(ExperimentResult& r, const std::vector<std::string>& families) {
  for (const auto& fam : families) r.fits.emplace_back(fam, fit_rows(r.rows, fam));
  r.fit = r.fits.front().second;
  for (const auto& [fam, f] : r.fits)
    if (f.slope > r.fit.slope) r.fit = f;
}

ThresholdVerdict make_verdict(double p, double m1, double m2, bool bounded_expected, const GrowthFit& fit,
                              const std::string& note) {
  ThresholdVerdict v;
  v.p = p;
  v.m1 = m1;
  v.m2 = m2;
  v.expected = bounded_expected ? Expectation::Bounded : Expectation::Unbounded;
  v.measured_slope = fit.slope;
  v.verdict = classify_slope(fit.slope);
  v.fit = fit;
  v.note = note;
  return v;
}

Signal from_spectrum(const GridSpec& g, const Generator& spec) {
  return inverse_fourier(Signal::from_generator(g.dual(), spec));
}

}  // namespace

double threshold_gap(double p, int d) {
  const double ip = std::isinf(p) ? 0.0 : 1.0 / p;
  return d * std::abs(0.5 - ip);
}

Generator make_fn(double n, int d, double lo, double hi) {
  if (d < 1 || d > 3) throw ValidationError("make_fn: d must be 1, 2 or 3");
  Generator f = gen::modulated_bump(n, lo, hi);
  return d == 1 ? f : gen::tensor_power(f, d);
}

Signal make_fn(const GridSpec& g, double n, double lo, double hi) {
  if (std::abs(n) > 0.5 * g.nyquist()) {
    std::ostringstream os;
    os << "make_fn: n = " << n << " beyond the resolvable band (Nyquist / 2 = " << 0.5 * g.nyquist() << ")";
    throw NumericalError(os.str());
  }
  return Signal::from_generator(g, make_fn(n, g.dim, lo, hi));
}

GridSpec fl_growth_grid(int d) { return d == 1 ? GridSpec::make(1, 2.0, 8192) : GridSpec::make(d, 2.0, 512); }
GridSpec modulation_grid() { return GridSpec::make(1, 4.0, 16384); }
GridSpec lp_grid() { return GridSpec::make(1, 1024.0, 8192); }

ExperimentResult fl_growth_experiment(double p, const SweepConfig& cfg, int d) {
  require_sweep(cfg, "fl_growth_experiment");
  if (!(p >= 1.0 && p <= 2.0)) throw ValidationError("fl_growth_experiment: needs 1 <= p <= 2");
  const GridSpec g = cfg.grid ? *cfg.grid : fl_growth_grid(d);
  if (g.dim != d) throw ValidationError("fl_growth_experiment: grid dimension differs from d");
  const Diffeo phi = cfg.diffeo();
  ExperimentResult r;
  r.name = "fl_growth";
  r.grid = g;
  const double expect = d * (1.0 / p - 0.5);
  const bool flat = phi.c() == 0.0 || p == 2.0;
  r.criterion = flat ? "|slope| <= 0.05" : "slope >= " + num(expect - 0.1);
  for (double n : cfg.ns) require_band(g, n, phi.max_d1(), "fl_growth_experiment");
  r.rows.resize(cfg.ns.size());
  parallel_for(cfg.ns.size(), [&](std::size_t i) {
    const double n = cfg.ns[i];
    const Generator fn = make_fn(n, d, cfg.chi_lo, cfg.chi_hi);
    const Generator comp = gen::compose(fn, [phi](double t) { return phi.phi(t); }, phi.describe(), d);
    const double in = fl_norm(Signal::from_generator(g, fn), p);
    const double out = fl_norm(Signal::from_generator(g, comp), p);
    r.rows[i] = SweepRow{"f_n o phi", n, in, out, out / in};
  });
  r.fits.emplace_back("f_n o phi", fit_rows(r.rows, "f_n o phi", false));
  r.fit = r.fits.front().second;
  r.pass = flat ? std::abs(r.fit.slope) <= 0.05 : r.fit.slope >= expect - 0.1;
  return r;
}

ExperimentResult multiplier_growth_check(double m, double p, const SweepConfig& cfg) {
  require_sweep(cfg, "multiplier_growth_check");
  const GridSpec g = cfg.grid ? *cfg.grid : modulation_grid();
  const Window w = Window::gaussian(g);
  const SymbolSpec mult = sym::multiplier(g.dim, m);
  ExperimentResult r;
  r.name = "multiplier_growth";
  r.grid = g;
  r.criterion = "slope <= " + num(m + 0.1);
  r.rows.resize(cfg.ns.size());
  for (std::size_t i = 0; i < cfg.ns.size(); ++i) {
    const Signal f = make_fn(g, cfg.ns[i], cfg.chi_lo, cfg.chi_hi);
    const double in = mp_norm(f, p, w, cfg.spacing);
    const double out = mp_norm(apply_pseudo_kn(mult, f), p, w, cfg.spacing);
    r.rows[i] = SweepRow{"<D>^m f_n", cfg.ns[i], in, out, out / in};
  }
  decide(r, {"<D>^m f_n"});
  r.pass = r.fit.slope <= m + 0.1;
  return r;
}

namespace {

ExperimentResult lp_phase_experiment(const std::string& name, double m, double p, const SweepConfig& cfg,
                                     bool bounded_expected, const std::string& note) {
  require_sweep(cfg, name.c_str());
  const GridSpec g = cfg.grid ? *cfg.grid : lp_grid();
  if (g.dim != 1) throw ValidationError(name + ": d = 1 only");
  const Diffeo phi = cfg.diffeo();
  const PhaseSpec phase = phase::phix(1, phi);
  const SymbolSpec s = sym::lp_cutoff(1, m);
  ExperimentResult r;
  r.name = name;
  r.grid = g;
  r.criterion = std::string("verdict ") + (bounded_expected ? "bounded" : "unbounded");
  const std::vector<std::string> families{"u_n", "v_n"};
  r.rows.resize(2 * cfg.ns.size());
  double edge_worst = 0.0;
  for (std::size_t i = 0; i < cfg.ns.size(); ++i) {
    const double n = cfg.ns[i];
    const Generator fn = make_fn(n, 1, cfg.chi_lo, cfg.chi_hi);
    Generator vn = fn;
    vn.description = "(" + fn.description + " o phi) phi'";
    vn.eval = [e = fn.eval, phi](const double* t) {
      const double y = phi.phi(t[0]);
      return e(&y) * phi.d1(t[0]);
    };
    vn.support.reset();
    for (int fam = 0; fam < 2; ++fam) {
      const Signal u = from_spectrum(g, fam == 0 ? fn : vn);
      const Signal Au = apply_fio1(phase, s, u);
      const double in = lp_norm(u, p), out = lp_norm(Au, p);
      // Mass of |A u|^p near the box edge.
      double tot = 0.0, edge = 0.0;
      for (std::size_t k = 0; k < Au.size(); ++k) {
        const double v = std::pow(std::abs(Au.samples[k]), p);
        tot += v;
        if (std::abs(g.node(static_cast<int>(k))) > 0.9 * g.half_width) edge += v;
      }
      edge_worst = std::max(edge_worst, edge / tot);
      r.rows[2 * i + fam] = SweepRow{families[fam], n, in, out, out / in};
    }
  }
  if (edge_worst > 1e-3) {
    std::ostringstream os;
    os << name << ": grid too small, " << edge_worst << " of |A u|^p lies in the outer 10% of " << g.describe();
    throw NumericalError(os.str());
  }
  decide(r, families);
  r.verdict = make_verdict(p, m, 0.0, bounded_expected, r.fit, note);
  r.pass = r.verdict->matches();
  return r;
}

}  // namespace

ExperimentResult theorem_mo_experiment(double m, double p, const SweepConfig& cfg) {
  if (!(p > 2.0) || std::isinf(p)) throw ValidationError("theorem_mo_experiment: needs 2 < p < infinity");
  const double t = -(0.5 - 1.0 / p);
  const bool expected = cfg.c == 0.0 ? m <= 1e-12 : m <= t + 1e-12;
  return lp_phase_experiment("theorem_mo", m, p, cfg, expected,
                             "bounded iff m <= " + num(t) + (cfg.c == 0.0 ? " (linear phi control)" : ""));
}

ExperimentResult casolp_experiment(double m, double p, const SweepConfig& cfg) {
  if (!(p >= 1.0) || std::isinf(p)) throw ValidationError("casolp_experiment: needs 1 <= p < infinity");
  const double t = -threshold_gap(p, 1);
  bool expected = m <= t + 1e-12;
  // With phi linear the operator is <x>^m times the identity on the band of psi0.
  if (cfg.c == 0.0) expected = m <= 1e-12;
  return lp_phase_experiment("casolp", m, p, cfg, expected, "bounded iff m <= " + num(t));
}

namespace {

void require_p_m(double p, const char* where) {
  if (!(p >= 1.0 && p <= 2.0)) throw ValidationError(std::string(where) + ": needs 1 <= p <= 2");
}

std::vector<Signal> m1_witnesses(const GridSpec& g, double m1, const SweepConfig& cfg) {
  const SymbolSpec lift = sym::multiplier(1, -m1);
  std::vector<Signal> out(cfg.ns.size());
  for (std::size_t i = 0; i < cfg.ns.size(); ++i) {
    Signal w = apply_pseudo_kn(lift, make_fn(g, cfg.ns[i], cfg.chi_lo, cfg.chi_hi));
    w.generator.reset();
    out[i] = std::move(w);
  }
  return out;
}

}  // namespace

ExperimentResult sharpness_m1_experiment(double m1, double p, const SweepConfig& cfg) {
  require_sweep(cfg, "sharpness_m1_experiment");
  require_p_m(p, "sharpness_m1_experiment");
  const GridSpec g = cfg.grid ? *cfg.grid : modulation_grid();
  if (g.dim != 1) throw ValidationError("sharpness_m1_experiment: d = 1 only");
  const Diffeo phi = cfg.diffeo();
  const PhaseSpec phase = phase::xphi(1, phi);
  const SymbolSpec s = sym::fio_m1(1, m1);
  const Window win = Window::gaussian(g);
  ExperimentResult r;
  r.name = "sharpness_m1";
  r.grid = g;
  const double t = -(1.0 / p - 0.5);
  const bool bounded = m1 <= t + 1e-12 || phi.c() == 0.0;
  r.criterion = std::string("verdict ") + (bounded ? "bounded" : "unbounded");
  const std::vector<Signal> ws = m1_witnesses(g, m1, cfg);
  r.rows.resize(ws.size());
  for (std::size_t i = 0; i < ws.size(); ++i) {
    const Signal Aw = apply_fio1(phase, s, ws[i]);
    const double in = mp_norm(ws[i], p, win, cfg.spacing), out = mp_norm(Aw, p, win, cfg.spacing);
    r.rows[i] = SweepRow{"<D>^{-m1} f_n", cfg.ns[i], in, out, out / in};
  }
  decide(r, {"<D>^{-m1} f_n"});
  r.verdict = make_verdict(p, m1, -kInf, bounded, r.fit, "bounded iff m1 <= " + num(t));
  r.pass = r.verdict->matches();
  return r;
}

ExperimentResult sharpness_m2_experiment(double m2, double p, const SweepConfig& cfg) {
  require_sweep(cfg, "sharpness_m2_experiment");
  require_p_m(p, "sharpness_m2_experiment");
  const GridSpec g = cfg.grid ? *cfg.grid : modulation_grid();
  if (g.dim != 1) throw ValidationError("sharpness_m2_experiment: d = 1 only");
  const GridSpec gs = g.dual();
  const Diffeo phi = cfg.diffeo();
  const PhaseSpec phase = phase::negate(phase::transpose(phase::xphi(1, phi)));
  const SymbolSpec star = sym::conjugate(sym::transpose(sym::fio_m1(1, m2)));
  const Window win = Window::gaussian(gs);
  ExperimentResult r;
  r.name = "sharpness_m2";
  r.grid = gs;
  const double t = -(1.0 / p - 0.5);
  const bool bounded = m2 <= t + 1e-12 || phi.c() == 0.0;
  r.criterion = std::string("verdict ") + (bounded ? "bounded" : "unbounded");
  const std::vector<Signal> ws = m1_witnesses(g, m2, cfg);
  r.rows.resize(ws.size());
  for (std::size_t i = 0; i < ws.size(); ++i) {
    const Signal gn = fourier_transform(ws[i]);
    const Signal Bg = apply_fio2(phase, star, gn);
    const double in = mp_norm(gn, p, win, cfg.spacing), out = mp_norm(Bg, p, win, cfg.spacing);
    r.rows[i] = SweepRow{"F <D>^{-m2} f_n", cfg.ns[i], in, out, out / in};
  }
  decide(r, {"F <D>^{-m2} f_n"});
  r.verdict = make_verdict(p, -kInf, m2, bounded, r.fit, "bounded iff m2 <= " + num(t));
  r.pass = r.verdict->matches();
  return r;
}

double fourier_consistency(const ExperimentResult& m1, const ExperimentResult& m2) {
  if (m1.rows.size() != m2.rows.size() || m1.rows.empty())
    throw ValidationError("fourier_consistency: sweeps differ");
  double worst = 0.0;
  for (std::size_t i = 0; i < m1.rows.size(); ++i) {
    if (m1.rows[i].n != m2.rows[i].n) throw ValidationError("fourier_consistency: sweeps differ");
    worst = std::max(worst, std::abs(m2.rows[i].ratio - m1.rows[i].ratio) / m1.rows[i].ratio);
  }
  return worst;
}

SuiteReport main_theorem_boundedness_suite(double p, const std::vector<SuiteCase>& cases, const SweepConfig& cfg) {
  require_sweep(cfg, "main_theorem_boundedness_suite");
  if (cases.empty()) throw ValidationError("main_theorem_boundedness_suite: no cases");
  const GridSpec g = cfg.grid ? *cfg.grid : modulation_grid();
  const Window win = Window::gaussian(g);
  SuiteReport rep;
  rep.p = p;
  rep.cases = cases;
  rep.pass = true;
  for (const SuiteCase& c : cases) {
    const double t = -threshold_gap(p, g.dim);
    if (c.m1 > t + 1e-12 || c.m2 > t + 1e-12)
      throw ValidationError("main_theorem_boundedness_suite: (" + num(c.m1) + "," + num(c.m2) +
                            ") lies above the threshold " + num(t));
    const PhaseSpec phase = phase_from_registry(c.phase, g.dim);
    const OperatorHandle op = OperatorHandle::fio_type1(phase, sym::model_sg(g.dim, c.m1, c.m2), g);
    ExperimentResult r;
    r.name = "main_theorem(" + num(c.m1) + "," + num(c.m2) + "," + c.phase + ")";
    r.grid = g;
    r.criterion = "slope <= 0.05";
    const std::vector<Signal> ws = m1_witnesses(g, c.m1, cfg);
    double corpus_max = 0.0;
    for (std::size_t i = 0; i < cfg.ns.size(); ++i) {
      const Signal f = make_fn(g, cfg.ns[i], cfg.chi_lo, cfg.chi_hi);
      for (int fam = 0; fam < 2; ++fam) {
        const Signal& in_sig = fam == 0 ? f : ws[i];
        const double in = mp_norm(in_sig, p, win, cfg.spacing);
        const double out = mp_norm(op.apply(in_sig), p, win, cfg.spacing);
        r.rows.push_back(SweepRow{fam == 0 ? "f_n" : "<D>^{-m1} f_n", cfg.ns[i], in, out, out / in});
        corpus_max = std::max(corpus_max, out / in);
      }
    }
    decide(r, {"f_n", "<D>^{-m1} f_n"});
    r.verdict = make_verdict(p, c.m1, c.m2, true, r.fit, "threshold " + num(t));
    r.pass = r.fit.slope <= 0.05;
    rep.pass = rep.pass && r.pass;
    rep.corpus_max_ratio.push_back(corpus_max);
    rep.results.push_back(std::move(r));
  }
  return rep;
}

}  // namespace fiolab
