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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only when all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "cli.hpp"
#include "fiolab/gabor.hpp"
#include "fiolab/gabor_matrix.hpp"
#include "fiolab/generators.hpp"
#include "fiolab/identities.hpp"
#include "fiolab/modnorm.hpp"
#include "fiolab/opnorm.hpp"
#include "fiolab/phases.hpp"
#include "fiolab/sharpness.hpp"
#include "fiolab/stft.hpp"
#include "fiolab/symbols.hpp"

using namespace fiolab;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char b[128];
  std::snprintf(b, sizeof b, f, a);
  return b;
}

std::string fmt(const char* f, double a, double b2) {
  char b[160];
  std::snprintf(b, sizeof b, f, a, b2);
  return b;
}

std::string fmt(const char* f, double a, double b2, double c) {
  char b[200];
  std::snprintf(b, sizeof b, f, a, b2, c);
  return b;
}

std::vector<Signal> random_corpus(const GridSpec& g, int n, double spread = 3.0, std::uint64_t seed0 = 100) {
  std::vector<Signal> c;
  for (int i = 0; i < n; ++i) c.push_back(Signal::from_generator(g, gen::random_schwartz(g.dim, seed0 + i, 4, spread, spread)));
  return c;
}

Outcome stft_inversion() {
  const GridSpec g = GridSpec::make(1, 16.0, 1024);
  const Window w = Window::gaussian(g);
  double worst = 0.0;
  for (const Signal& f : random_corpus(g, 5)) worst = std::max(worst, relative_l2_error(istft(stft(f, w), w), f));
  return {worst < 1e-6, fmt("max relative L2 round-trip error %.2e (< 1e-6)", worst)};
}

Outcome stft_orthogonality() {
  const GridSpec g = GridSpec::make(1, 16.0, 1024);
  const Window w = Window::gaussian(g);
  double worst = 0.0;
  for (const Signal& f : random_corpus(g, 20)) {
    const StftData V = stft(f, w);
    double s = 0.0;
    for (const auto& v : V.values) s += std::norm(v);
    const double nv = std::sqrt(s * g.space_step() * g.freq_step());
    const double nf = lp_norm(f, 2.0) * lp_norm(w.signal, 2.0);
    worst = std::max(worst, std::abs(nv - nf) / nf);
  }
  return {worst < 1e-8, fmt("max |‖V_g f‖ - ‖f‖‖g‖| / (‖f‖‖g‖) = %.2e over 20 signals (< 1e-8)", worst)};
}

Outcome gabor_frames() {
  const GridSpec g = GridSpec::make(1, 16.0, 1024);
  const Window w = Window::gaussian(g);
  const GaborLattice lat = make_lattice(g, 0.5, 0.5);
  const Window dual = dual_window(w, lat);
  const Window tight = tight_window(w, lat);
  double rec = 0.0, tig = 0.0;
  for (const Signal& f : random_corpus(g, 5)) {
    rec = std::max(rec, relative_l2_error(gabor_synthesis(gabor_analysis(f, w, lat), dual, g), f));
    tig = std::max(tig, relative_l2_error(frame_operator_direct(f, tight, lat), f));
  }
  return {rec < 1e-8 && tig < 1e-8, fmt("dual-window reconstruction %.2e, tight frame operator - I %.2e (< 1e-8)", rec, tig)};
}

Outcome norm_equivalence() {
  const GridSpec g = GridSpec::make(1, 16.0, 512);
  const Window w = Window::gaussian(g);
  const GaborLattice lat = make_lattice(g, 0.5, 0.5);
  std::vector<Signal> corpus = random_corpus(g, 8);
  corpus.push_back(Signal::from_generator(g, gen::gaussian(1)));
  ModNormOptions opt;
  opt.spacing = 0.125;
  double worst = 0.0;
  for (double p : {1.0, 2.0, kInf})
    for (WeightSpec ws : {WeightSpec{0, 0}, WeightSpec{1, 1}})
      worst = std::max(worst, gabor_norm_equivalence_check(corpus, p, p, ws, w, lat, opt).spread());
  return {worst < 10.0, fmt("max spread of seq_norm / mod_norm = %.3f over p in {1,2,inf}, weights (0,0),(1,1) (< 10)", worst)};
}

Outcome dilation_exponents() {
  const GridSpec g = GridSpec::make(1, 16.0, 1024);
  const Window w = Window::gaussian(g);
  const Signal f = Signal::from_generator(g, gen::gaussian(1));
  const std::vector<double> up{1.0, 1.5, 2.0, 3.0, 4.0}, down{0.4, 0.5, 0.7, 1.0};
  const DilationReport u2 = dilation_exponent_check(f, 2.0, up, w), d2 = dilation_exponent_check(f, 2.0, down, w);
  bool ok = std::abs(u2.fit.slope + 0.5) <= 0.02 && std::abs(d2.fit.slope + 0.5) <= 0.02;
  std::ostringstream os;
  os << fmt("p=2 slopes %.4f / %.4f", u2.fit.slope, d2.fit.slope);
  for (double p : {1.0, kInf}) {
    const DilationReport a = dilation_exponent_check(f, p, up, w), b = dilation_exponent_check(f, p, down, w);
    ok = ok && a.pass && b.pass;
    os << "; p=" << p << fmt(" slopes %.4f (<= %.3f + 0.1)", a.fit.slope, a.bound + 0.0)
       << fmt(" / %.4f (>= %.3f - 0.1)", b.fit.slope, b.bound + 0.0);
  }
  return {ok, os.str()};
}

Outcome almost_diagonalization() {
  const GridSpec g = GridSpec::make(1, 16.0, 1024);
  const Window w = Window::gaussian(g);
  const GaborLattice lat = make_lattice(g, 0.5, 0.5);
  const OperatorHandle op = OperatorHandle::pseudo_kn(sym::model_sg(1, -0.5, -0.5), g);
  std::vector<GaborMatrix> ms;
  std::vector<double> cs;
  for (int r : {16, 24}) {
    ms.push_back(gabor_matrix(op, w, with_radius(lat, r, r)));
    cs.push_back(diag_decay_certify(ms.back(), -0.5, -0.5, 1, 1).C);
  }
  const double cr = cs[1] / cs[0];
  const bool c_ok = std::isfinite(cs[0]) && std::isfinite(cs[1]) && cr >= 0.5 && cr <= 2.0;
  const SchurCertificate sc = schur_certify(ms, SchurWeights{-0.5, -0.5});
  const OperatorHandle ctl = OperatorHandle::pseudo_kn(sym::model_sg(1, 1.0, 0.0), g);
  std::vector<GaborMatrix> cm;
  for (int r : {12, 16, 20, 24}) cm.push_back(gabor_matrix(ctl, w, with_radius(lat, r, r)));
  const SchurCertificate sn = schur_certify(cm, SchurWeights{});
  double top0 = 0, top1 = 0;
  for (double v : sn.sums.front()) top0 = std::max(top0, v);
  for (double v : sn.sums.back()) top1 = std::max(top1, v);
  std::ostringstream os;
  os << "C = " << cs[0] << " (R=16), " << cs[1] << " (R=24); Schur change " << sc.max_relative_change
     << (sc.stable ? " stable" : " UNSTABLE") << "; order (+1,0) control " << top0 << " -> " << top1
     << (sn.divergent ? " divergent" : " NOT divergent");
  return {c_ok && sc.finite && sc.stable && sn.divergent, os.str()};
}

Outcome structural_identities() {
  const GridSpec g = GridSpec::make(1, 16.0, 2048);
  const PhaseSpec phi = phase_from_registry("phase_xphi(0.3)");
  const SymbolSpec s = sym::l2_test(1);
  const std::vector<Signal> corpus = random_corpus(g, 8);
  const IdentityReport adj = adjoint_identity_check(phi, s, corpus);
  const IdentityReport tr = transpose_identity_check(phi, s, corpus);
  const LinkReport link = link_identity_check(phi, s, corpus);
  const GridSpec gl = GridSpec::make(1, 32.0, 4096);
  std::vector<Signal> gc;
  for (auto [x0, e0] : std::vector<std::pair<double, double>>{{0.5, 1.5}, {2.0, 3.0}, {-1.0, -2.5}, {3.0, 6.0}})
    gc.push_back(Signal::from_generator(gl, gen::gaussian(1, 1.0, {x0}, {e0})));
  const IdentityReport dil = dilation_conjugation_check(phi, s, {{1, 0}, {0, 1}, {2, 1}, {1, 2}, {2, 0}}, gc);
  std::ostringstream os;
  os << "adjoint " << adj.max_residual << ", transpose " << tr.max_residual << ", Fourier conjugation "
     << std::max(link.exact.max_residual, link.literal.max_residual) << ", dilation conjugation " << dil.max_residual
     << " (< 1e-8)";
  return {adj.pass() && tr.pass() && link.pass() && dil.pass(), os.str()};
}

Outcome composition() {
  const GridSpec g = GridSpec::make(1, 8.0, 2048);
  const CompositionReport r =
      compose_leading(sym::multiplier(1, 1.0), phase_from_registry("phase_xphi(0.3)"), sym::one(1), g, {2, 3, 4});
  std::ostringstream os;
  os << "r_j = " << r.residuals[0] << ", " << r.residuals[1] << ", " << r.residuals[2] << "; min ratio " << r.min_ratio
     << " (>= 1.5)";
  return {r.pass, os.str()};
}

Outcome counterexample_growth() {
  SweepConfig cfg;
  const ExperimentResult a = fl_growth_experiment(1.0, cfg), b = fl_growth_experiment(2.0, cfg);
  const bool ok = a.fit.slope >= 0.4 && a.fit.slope <= 0.6 && a.fit.r_squared >= 0.95 && std::abs(b.fit.slope) <= 0.05;
  return {ok, fmt("p=1 slope %.4f (r^2 %.4f), p=2 control slope %.4f", a.fit.slope, a.fit.r_squared, b.fit.slope)};
}

Outcome multiplier_growth() {
  const ExperimentResult r = multiplier_growth_check(1.0, 1.0, SweepConfig{});
  return {r.fit.slope >= 0.9 && r.fit.slope <= 1.1, fmt("m=1, p=1 slope %.4f (in [0.9, 1.1])", r.fit.slope)};
}

Outcome lp_unboundedness() {
  SweepConfig cfg;
  const ExperimentResult a = theorem_mo_experiment(0.0, 4.0, cfg);
  const ExperimentResult b = theorem_mo_experiment(-0.25, 4.0, cfg);
  cfg.c = 0.0;
  const ExperimentResult c = theorem_mo_experiment(0.0, 4.0, cfg);
  const bool ok = a.fit.slope >= 0.1 && b.fit.slope <= 0.05 && std::abs(c.fit.slope) <= 0.05;
  return {ok, fmt("p=4: m=0 slope %.4f (>= 0.1), m=-1/4 slope %.4f (<= 0.05), linear-phi control %.4f", a.fit.slope,
                  b.fit.slope, c.fit.slope)};
}

ExperimentResult g_m1_up, g_m1_at;

Outcome sharpness_m1() {
  g_m1_up = sharpness_m1_experiment(-0.25, 1.0, SweepConfig{});
  g_m1_at = sharpness_m1_experiment(-0.5, 1.0, SweepConfig{});
  const bool ok = g_m1_up.fit.slope >= 0.15 && g_m1_at.fit.slope <= 0.05;
  return {ok, fmt("p=1: m1=-1/4 slope %.4f (>= 0.15), m1=-1/2 slope %.4f (<= 0.05)", g_m1_up.fit.slope, g_m1_at.fit.slope)};
}

Outcome sharpness_m2() {
  if (g_m1_up.rows.empty()) {
    g_m1_up = sharpness_m1_experiment(-0.25, 1.0, SweepConfig{});
    g_m1_at = sharpness_m1_experiment(-0.5, 1.0, SweepConfig{});
  }
  const ExperimentResult up = sharpness_m2_experiment(-0.25, 1.0, SweepConfig{});
  const ExperimentResult at = sharpness_m2_experiment(-0.5, 1.0, SweepConfig{});
  const double gap = std::max(fourier_consistency(g_m1_up, up), fourier_consistency(g_m1_at, at));
  const bool same = up.verdict && at.verdict && g_m1_up.verdict && g_m1_at.verdict &&
                    up.verdict->verdict == g_m1_up.verdict->verdict && at.verdict->verdict == g_m1_at.verdict->verdict;
  return {gap < 1e-6 && same && up.pass && at.pass,
          fmt("max relative gap to the m1 data %.2e (< 1e-6); slopes %.4f / %.4f", gap, up.fit.slope, at.fit.slope)};
}

Outcome lp_threshold_table() {
  std::ostringstream os;
  bool ok = true;
  int inconclusive = 0;
  for (double p : {1.0, 2.0, 4.0}) {
    os << "p=" << p << ":";
    for (double m : {0.0, -0.25, -0.5}) {
      const ExperimentResult r = casolp_experiment(m, p, SweepConfig{});
      const bool cell = r.verdict && r.verdict->matches();
      ok = ok && cell;
      if (!r.verdict || r.verdict->verdict == Verdict::Inconclusive) ++inconclusive;
      os << " " << (r.verdict ? to_string(r.verdict->verdict) : "none") << (cell ? "" : "(MISMATCH)");
    }
    os << "; ";
  }
  os << inconclusive << " inconclusive cells";
  return {ok, os.str()};
}

Outcome l2_boundedness() {
  const PhaseSpec phi = phase_from_registry("phase_xphi(0.3)");
  std::vector<double> est;
  for (int N : {1024, 2048}) {
    const GridSpec g = GridSpec::make(1, 8.0, N);
    est.push_back(op_norm_l2(OperatorHandle::fio_type1(phi, sym::l2_test(1), g)).estimate);
  }
  const double change = std::abs(est[1] / est[0] - 1.0);
  return {change < 0.05, fmt("‖A‖ = %.8f (N=1024), %.8f (N=2048), change %.2e (< 5%%)", est[0], est[1], change)};
}

fs::path g_configs = "tools/configs";

Outcome determinism() {
  const fs::path base = fs::temp_directory_path() / ("fiolab_acceptance_" + std::to_string(::getpid()));
  fs::remove_all(base);
  std::ostringstream out, err;
  bool ok = true;
  std::ostringstream os;
  for (const char* cfg : {"fl_growth.ini", "multiplier_growth.ini"}) {
    const fs::path a = base / (std::string(cfg) + ".a"), b = base / (std::string(cfg) + ".b");
    const int c1 = cli::run_cli({"fiolab", "experiment", "--config", (g_configs / cfg).string(), "--out", a.string()}, out, err);
    const int c2 = cli::run_cli({"fiolab", "rerun", (a / "manifest.ini").string(), "--out", b.string()}, out, err);
    ok = ok && c1 == 0 && c2 == 0;
    os << cfg << (c1 == 0 && c2 == 0 ? " identical; " : " DIFFERS; ");
  }
  fs::remove_all(base);
  if (!ok) os << err.str();
  os << "CSV outputs re-run from manifests";
  return {ok, os.str()};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_configs = argv[1];
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"stft_inversion", stft_inversion},
      {"stft_orthogonality", stft_orthogonality},
      {"gabor_frames", gabor_frames},
      {"norm_equivalence", norm_equivalence},
      {"dilation_exponents", dilation_exponents},
      {"almost_diagonalization", almost_diagonalization},
      {"fio_structural_identities", structural_identities},
      {"composition_leading_order", composition},
      {"counterexample_growth", counterexample_growth},
      {"multiplier_growth", multiplier_growth},
      {"lp_unboundedness_p4", lp_unboundedness},
      {"sharpness_m1", sharpness_m1},
      {"sharpness_m2_fourier", sharpness_m2},
      {"lp_threshold_table", lp_threshold_table},
      {"l2_boundedness", l2_boundedness},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) ++failed;
    std::printf("%s %2zu %-26s %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
