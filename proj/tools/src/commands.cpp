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

#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "fiolab/csv.hpp"
#include "fiolab/error.hpp"
#include "fiolab/gabor.hpp"
#include "fiolab/gabor_matrix.hpp"
#include "fiolab/modnorm.hpp"
#include "fiolab/opnorm.hpp"
#include "fiolab/phases.hpp"
#include "fiolab/sharpness.hpp"
#include "fiolab/stft.hpp"
#include "fiolab/symbols.hpp"
#include "fiolab/validate.hpp"
#include "svg_plot.hpp"

namespace fiolab::cli {

namespace pt = boost::property_tree;

namespace {

std::ofstream open_output(Context& ctx, const std::string& name, bool binary = false) {
  const auto path = ctx.manifest->output(name);
  std::ofstream out(path, binary ? std::ios::binary : std::ios::out);
  if (!out) throw ValidationError("cannot write '" + path.string() + "'");
  return out;
}

void put(pt::ptree& t, const std::string& key, const std::string& value) {
  t.put(pt::ptree::path_type(key, '/'), value);
}

void put(pt::ptree& t, const std::string& key, double value) { put(t, key, format_double(value)); }

void write_ini(Context& ctx, const std::string& name, const pt::ptree& t) {
  auto out = open_output(ctx, name);
  pt::write_ini(out, t);
}

// Multi-index of flat position i in a d-dimensional box with n points per axis.
void unflatten_box(std::size_t i, int d, int n, int* idx) {
  for (int a = d - 1; a >= 0; --a) {
    idx[a] = static_cast<int>(i % static_cast<std::size_t>(n));
    i /= static_cast<std::size_t>(n);
  }
}

std::vector<std::string> axis_columns(const std::string& stem, int d) {
  std::vector<std::string> c;
  for (int a = 0; a < d; ++a) c.push_back(d == 1 ? stem : stem + std::to_string(a));
  return c;
}

void write_signal(Context& ctx, const std::string& name, const Signal& f) {
  auto out = open_output(ctx, name);
  write_signal_csv(out, f);
}

Window make_window(const ExperimentConfig& cfg, const GridSpec& g) { return Window::gaussian(g, cfg.window_a); }

}  // namespace

Signal load_input(const ExperimentConfig& cfg, const GridSpec& g) {
  if (!cfg.signal_file.empty()) {
    std::ifstream in(cfg.signal_file);
    if (!in) throw ValidationError("input: cannot open '" + cfg.signal_file + "'");
    return read_signal_csv(in, g);
  }
  return Signal::from_generator(g, input_generator(cfg.signal, g.dim, cfg.seed));
}

OperatorHandle make_operator(const ExperimentConfig& cfg, const GridSpec& g) {
  const SymbolSpec s = symbol_from_registry(cfg.symbol, g.dim);
  if (cfg.op_kind == "kn") return OperatorHandle::pseudo_kn(s, g);
  if (cfg.op_kind == "weyl") return OperatorHandle::pseudo_weyl(s, g);
  const PhaseSpec phi = phase_from_registry(cfg.phase, g.dim);
  if (cfg.op_kind == "fio1") return OperatorHandle::fio_type1(phi, s, g);
  return OperatorHandle::fio_type2(phi, s, g);
}

int cmd_stft(Context& ctx) {
  const auto& cfg = ctx.cfg;
  const GridSpec g = cfg.grid_or_default();
  const Signal f = load_input(cfg, g);
  const Window w = make_window(cfg, g);
  const PhaseSampling s = cfg.spacing ? PhaseSampling::isotropic(g, *cfg.spacing) : PhaseSampling{};
  const StftData V = stft(f, w, s);
  const int d = g.dim;
  {
    auto out = open_output(ctx, "stft.csv");
    std::vector<std::string> cols = axis_columns("x", d);
    for (const auto& c : axis_columns("eta", d)) cols.push_back(c);
    for (const char* c : {"real", "imag", "abs"}) cols.push_back(c);
    CsvWriter csv(out, cols);
    int xi_idx[3], ej_idx[3];
    for (std::size_t xi = 0; xi < V.x_count(); ++xi) {
      unflatten_box(xi, d, V.nx, xi_idx);
      for (std::size_t ej = 0; ej < V.eta_count(); ++ej) {
        unflatten_box(ej, d, V.neta, ej_idx);
        for (int a = 0; a < d; ++a) csv.cell(g.node(V.x_index(xi_idx[a])));
        for (int a = 0; a < d; ++a) csv.cell(g.freq(V.eta_index(ej_idx[a])));
        const cplx v = V.at(xi, ej);
        csv.cell(v.real()).cell(v.imag()).cell(std::abs(v));
        csv.end_row();
      }
    }
  }
  *ctx.out << "stft: " << V.x_count() << " x " << V.eta_count() << " samples, window " << w.id << "\n";
  if (s.eta_stride == 1) {
    const Signal back = istft(V, w);
    *ctx.out << "stft: round-trip relative L2 error " << relative_l2_error(back, f) << "\n";
  }
  return kSuccess;
}

int cmd_gabor(Context& ctx, const std::string& mode) {
  const auto& cfg = ctx.cfg;
  const GridSpec g = cfg.grid_or_default();
  const Window w = make_window(cfg, g);
  const GaborLattice lat = make_lattice(g, cfg.alpha, cfg.beta);
  const int d = g.dim;
  if (mode == "bounds") {
    const FrameBounds fb = frame_bounds(w, lat);
    auto out = open_output(ctx, "frame_bounds.csv");
    CsvWriter csv(out, {"alpha", "beta", "redundancy", "A", "B", "is_frame"});
    csv.cell(cfg.alpha).cell(cfg.beta).cell(lat.redundancy()).cell(fb.A).cell(fb.B).cell(fb.is_frame ? 1 : 0);
    csv.end_row();
    *ctx.out << "gabor bounds: A=" << fb.A << " B=" << fb.B << " B/A=" << fb.B / fb.A
             << (fb.is_frame ? " (frame)" : " (not a frame)") << "\n";
    return fb.is_frame ? kSuccess : kValidationFailure;
  }
  if (mode == "dual") {
    CgReport rep;
    const Window dual = dual_window(w, lat, &rep);
    write_signal(ctx, "dual_window.csv", dual.signal);
    *ctx.out << "gabor dual: CG iterations " << rep.iterations << ", residual " << rep.residual << "\n";
    return kSuccess;
  }
  const Signal f = load_input(cfg, g);
  const GaborCoeffs c = gabor_analysis(f, w, lat);
  if (mode == "analysis") {
    auto out = open_output(ctx, "gabor_coeffs.csv");
    std::vector<std::string> cols = axis_columns("k", d);
    for (const auto& col : axis_columns("n", d)) cols.push_back(col);
    for (const char* col : {"real", "imag", "abs"}) cols.push_back(col);
    CsvWriter csv(out, cols);
    int k[3], n[3];
    for (std::size_t i = 0; i < c.values.size(); ++i) {
      lat.unflat(i, k, n);
      for (int a = 0; a < d; ++a) csv.cell(k[a]);
      for (int a = 0; a < d; ++a) csv.cell(n[a]);
      csv.cell(c.values[i].real()).cell(c.values[i].imag()).cell(std::abs(c.values[i]));
      csv.end_row();
    }
    *ctx.out << "gabor analysis: " << c.values.size() << " coefficients, redundancy " << lat.redundancy() << "\n";
    return kSuccess;
  }
  if (mode == "synthesis") {
    const Window dual = dual_window(w, lat);
    const Signal back = gabor_synthesis(c, dual, g);
    write_signal(ctx, "synthesis.csv", back);
    *ctx.out << "gabor synthesis: dual-window reconstruction relative L2 error " << relative_l2_error(back, f) << "\n";
    return kSuccess;
  }
  throw ValidationError("gabor: mode must be analysis, synthesis, bounds or dual");
}

int cmd_norm(Context& ctx) {
  const auto& cfg = ctx.cfg;
  const GridSpec g = cfg.grid_or_default();
  const Signal f = load_input(cfg, g);
  const Window w = make_window(cfg, g);
  ModNormOptions opt;
  opt.spacing = cfg.spacing;
  const WeightSpec weight{cfg.s1, cfg.s2};
  const NormReport r = mod_norm(f, cfg.p, cfg.q, weight, w, opt);
  const double l2 = lp_norm(f, 2.0);
  {
    auto out = open_output(ctx, "norm.csv");
    CsvWriter csv(out, {"p", "q", "s1", "s2", "window", "value", "l2_norm"});
    csv.cell(format_exponent(cfg.p)).cell(format_exponent(cfg.q)).cell(cfg.s1).cell(cfg.s2).cell(w.id);
    csv.cell(r.value).cell(l2);
    csv.end_row();
  }
  *ctx.out << "norm: M^{" << format_exponent(cfg.p) << "," << format_exponent(cfg.q) << "} weight (" << cfg.s1 << ","
           << cfg.s2 << ") = " << format_double(r.value) << "\n";
  *ctx.out << "norm: L2 = " << format_double(l2) << "\n";
  return kSuccess;
}

int cmd_apply(Context& ctx) {
  const auto& cfg = ctx.cfg;
  const GridSpec g = cfg.grid_or_default();
  const Signal f = load_input(cfg, g);
  const OperatorHandle op = make_operator(cfg, g);
  const Signal Af = op.apply(f);
  write_signal(ctx, "output.csv", Af);
  *ctx.out << "apply: " << op.id() << " |Af|/|f| = " << lp_norm(Af, 2.0) / lp_norm(f, 2.0) << "\n";
  return kSuccess;
}

int cmd_matrix(Context& ctx) {
  const auto& cfg = ctx.cfg;
  const GridSpec g = cfg.grid_or_default();
  const Window w = make_window(cfg, g);
  const OperatorHandle op = make_operator(cfg, g);
  GaborLattice lat = make_lattice(g, cfg.alpha, cfg.beta);
  if (cfg.radius_k >= 0) lat = with_radius(lat, cfg.radius_k, cfg.radius_n);
  const GaborMatrix M = gabor_matrix(op, w, lat, cfg.zero_threshold);
  if (cfg.matrix_format != "binary") {
    auto out = open_output(ctx, "gabor_matrix.csv");
    write_gabor_matrix_csv(out, M);
  }
  if (cfg.matrix_format != "csv") {
    auto out = open_output(ctx, "gabor_matrix.bin", true);
    write_gabor_matrix_binary(out, M);
  }
  *ctx.out << "matrix: " << op.id() << " dimension " << M.dim() << ", " << M.nonzeros() << " nonzeros\n";
  int code = kSuccess;
  if (cfg.spot_checks > 0) {
    const SpotCheck sc = gabor_matrix_spot_check(M, op, w, cfg.spot_checks, cfg.seed);
    *ctx.out << "matrix: spot check " << sc.checked << " entries, max error " << sc.max_error
             << (sc.pass() ? " (pass)" : " (FAIL)") << "\n";
    if (!sc.pass()) code = kNumericalFailure;
  }
  const bool pseudo = op.kind() == OperatorKind::PseudoKN || op.kind() == OperatorKind::PseudoWeyl;
  if (pseudo) {
    const DecayCertificate c =
        diag_decay_certify(M, op.symbol().m1, op.symbol().m2, 1, 1, op.kind() == OperatorKind::PseudoWeyl);
    *ctx.out << "matrix: decay certificate C = " << c.C << " (N1 = N2 = 1)\n";
  } else if (op.phase()) {
    const ConcentrationReport c = fio_kernel_concentration(M, *op.phase());
    *ctx.out << "matrix: canonical-graph distance max " << c.max_distance << ", mean " << c.mean_distance
             << " cells over " << c.evaluated << " columns\n";
  }
  return code;
}

namespace {

void write_rows(Context& ctx, const std::string& name, const std::vector<ExperimentResult>& results,
                const std::vector<std::string>& labels) {
  auto out = open_output(ctx, name + ".csv");
  const bool multi = results.size() > 1;
  std::vector<std::string> cols{"family", "n", "norm_in", "norm_out", "ratio"};
  if (multi) cols.insert(cols.begin(), "case");
  CsvWriter csv(out, cols);
  for (std::size_t k = 0; k < results.size(); ++k)
    for (const auto& row : results[k].rows) {
      if (multi) csv.cell(labels[k]);
      csv.cell(row.family).cell(row.n).cell(row.norm_in).cell(row.norm_out).cell(row.ratio);
      csv.end_row();
    }
}

void put_result(pt::ptree& t, const std::string& sec, const ExperimentResult& r) {
  put(t, sec + "/name", r.name);
  put(t, sec + "/grid", r.grid.describe());
  put(t, sec + "/criterion", r.criterion);
  put(t, sec + "/slope", r.fit.slope);
  put(t, sec + "/r_squared", r.fit.r_squared);
  put(t, sec + "/pass", r.pass ? "true" : "false");
  for (std::size_t i = 0; i < r.fits.size(); ++i) {
    const std::string p = sec + "/fit" + std::to_string(i) + "_";
    put(t, p + "family", r.fits[i].first);
    put(t, p + "slope", r.fits[i].second.slope);
    put(t, p + "intercept", r.fits[i].second.intercept);
    put(t, p + "r_squared", r.fits[i].second.r_squared);
  }
  if (r.verdict) {
    put(t, sec + "/expected", to_string(r.verdict->expected));
    put(t, sec + "/verdict", to_string(r.verdict->verdict));
    if (!r.verdict->note.empty()) put(t, sec + "/note", r.verdict->note);
  }
}

void plot_results(Context& ctx, const std::string& name, const std::vector<ExperimentResult>& results,
                  const std::vector<std::string>& labels) {
  std::vector<Series> series;
  for (std::size_t k = 0; k < results.size(); ++k)
    for (const auto& [family, fit] : results[k].fits) {
      Series s;
      s.label = results.size() > 1 ? labels[k] + " " + family : family;
      for (const auto& row : results[k].rows)
        if (row.family == family) s.x.push_back(row.n), s.y.push_back(row.ratio);
      series.push_back(std::move(s));
    }
  auto out = open_output(ctx, name + ".svg");
  write_loglog_svg(out, name, "n", "norm_out / norm_in", series);
}

int report(Context& ctx, const std::string& name, const std::vector<ExperimentResult>& results,
           const std::vector<std::string>& labels) {
  write_rows(ctx, name, results, labels);
  pt::ptree t;
  bool pass = true, inconclusive = false;
  for (std::size_t k = 0; k < results.size(); ++k) {
    const auto& r = results[k];
    put_result(t, results.size() > 1 ? "case" + std::to_string(k) : std::string("result"), r);
    if (results.size() > 1) put(t, "case" + std::to_string(k) + "/case", labels[k]);
    pass = pass && r.pass;
    if (r.verdict && r.verdict->verdict == Verdict::Inconclusive) inconclusive = true;
    *ctx.out << "experiment " << r.name << (results.size() > 1 ? " [" + labels[k] + "]" : std::string()) << ": slope "
             << r.fit.slope << " (r^2 " << r.fit.r_squared << "), criterion " << r.criterion;
    if (r.verdict) *ctx.out << ", verdict " << to_string(r.verdict->verdict);
    *ctx.out << (r.pass ? " -> pass" : " -> FAIL") << "\n";
  }
  put(t, "summary/pass", pass ? "true" : "false");
  write_ini(ctx, name + "_verdict.ini", t);
  if (ctx.plot) plot_results(ctx, name, results, labels);
  if (inconclusive) return kInconclusive;
  return pass ? kSuccess : kValidationFailure;
}

int l2_stability(Context& ctx) {
  const auto& cfg = ctx.cfg;
  const GridSpec base = cfg.grid_or_default();
  PowerIterOptions opt;
  opt.seed = cfg.seed;
  std::vector<double> estimates;
  std::vector<OpNormReport> reps;
  for (int N : cfg.sizes) {
    const GridSpec g = GridSpec::make(base.dim, base.half_width, N);
    reps.push_back(op_norm_l2(make_operator(cfg, g), opt));
    estimates.push_back(reps.back().estimate);
  }
  {
    auto out = open_output(ctx, "l2_stability.csv");
    CsvWriter csv(out, {"samples", "estimate", "lower", "upper", "iterations", "residual"});
    for (std::size_t i = 0; i < reps.size(); ++i) {
      csv.cell(cfg.sizes[i]).cell(reps[i].estimate).cell(reps[i].lower).cell(reps[i].upper);
      csv.cell(reps[i].iterations).cell(reps[i].residual);
      csv.end_row();
    }
  }
  const auto [lo, hi] = std::minmax_element(estimates.begin(), estimates.end());
  const double change = *hi / *lo - 1.0;
  const bool pass = change < 0.05;
  pt::ptree t;
  put(t, "result/name", "l2_stability");
  put(t, "result/criterion", "max/min - 1 < 0.05 over grid sizes");
  put(t, "result/relative_change", change);
  put(t, "result/pass", pass ? "true" : "false");
  write_ini(ctx, "l2_stability_verdict.ini", t);
  if (ctx.plot) {
    Series s{"|A|_{L2->L2}", {}, estimates};
    for (int N : cfg.sizes) s.x.push_back(N);
    auto out = open_output(ctx, "l2_stability.svg");
    write_loglog_svg(out, "l2_stability", "N", "norm estimate", {s});
  }
  for (std::size_t i = 0; i < reps.size(); ++i)
    *ctx.out << "experiment l2_stability: N=" << cfg.sizes[i] << " norm " << format_double(reps[i].estimate) << " ("
             << reps[i].iterations << " Lanczos steps)\n";
  *ctx.out << "experiment l2_stability: relative change " << change << (pass ? " -> pass" : " -> FAIL") << "\n";
  return pass ? kSuccess : kValidationFailure;
}

}  // namespace

int cmd_experiment(Context& ctx, const std::string& name) {
  const auto& cfg = ctx.cfg;
  const double p = cfg.exp_p;
  const SweepConfig& sw = cfg.sweep;
  if (name == "fl_growth") return report(ctx, name, {fl_growth_experiment(p, sw, cfg.dim)}, {});
  if (name == "multiplier_growth") return report(ctx, name, {multiplier_growth_check(cfg.m, p, sw)}, {});
  if (name == "theorem_mo") return report(ctx, name, {theorem_mo_experiment(cfg.m, p, sw)}, {});
  if (name == "casolp") return report(ctx, name, {casolp_experiment(cfg.m, p, sw)}, {});
  if (name == "sharpness_m1") return report(ctx, name, {sharpness_m1_experiment(cfg.m1, p, sw)}, {});
  if (name == "sharpness_m2") return report(ctx, name, {sharpness_m2_experiment(cfg.m2, p, sw)}, {});
  if (name == "l2_stability") return l2_stability(ctx);
  if (name == "boundedness_suite") {
    std::vector<SuiteCase> cases = cfg.cases;
    if (cases.empty()) cases.push_back(SuiteCase{cfg.m1, cfg.m2, "phase_xphi(0.3)"});
    const SuiteReport rep = main_theorem_boundedness_suite(p, cases, sw);
    std::vector<std::string> labels;
    for (const auto& c : cases) {
      std::ostringstream os;
      os << "(" << c.m1 << " " << c.m2 << " " << c.phase << ")";
      labels.push_back(os.str());
    }
    const int code = report(ctx, name, rep.results, labels);
    for (std::size_t k = 0; k < rep.corpus_max_ratio.size(); ++k)
      *ctx.out << "experiment boundedness_suite [" << labels[k] << "]: corpus max ratio " << rep.corpus_max_ratio[k]
               << "\n";
    return code;
  }
  throw ValidationError("experiment: unknown name '" + name + "'");
}

int cmd_validate(Context& ctx, const std::string& what, const std::string& text) {
  const GridSpec g = ctx.cfg.grid_or_default();
  const PhaseBox box{g.half_width, g.nyquist()};
  bool is_phase = what == "phase";
  if (what.empty()) {
    try {
      phase_from_registry(text, g.dim);
      is_phase = true;
    } catch (const ValidationError&) {
      symbol_from_registry(text, g.dim);
    }
  } else if (what != "symbol" && what != "phase") {
    throw ValidationError("validate: expected 'phase' or 'symbol', got '" + what + "'");
  }
  auto out = open_output(ctx, "validate.csv");
  CsvWriter csv(out, {"entry", "quantity", "value"});
  auto row = [&](const std::string& q, double v) {
    csv.cell(text).cell(q).cell(v);
    csv.end_row();
  };
  if (is_phase) {
    const PhaseSpec phi = phase_from_registry(text, g.dim);
    ctx.manifest->add_registry("phase", text);
    const NondegReport nd = nondeg_validate(phi, box);
    const GrowthReport gr = growth_validate(phi, box);
    const double hs = mixed_hessian_sup(phi, box);
    row("delta_min", nd.delta_min);
    row("ratio_x", gr.ratio_x);
    row("ratio_eta", gr.ratio_eta);
    row("mixed_hessian_sup", hs);
    const bool pass = nd.pass && gr.pass;
    *ctx.out << "validate phase " << text << " on |x| <= " << box.x_max << ", |eta| <= " << box.eta_max << "\n";
    *ctx.out << "  delta_min = " << nd.delta_min << (nd.pass ? " (non-degenerate)" : " (DEGENERATE)") << "\n";
    *ctx.out << "  growth ratios: <grad_x Phi>/<eta> >= " << gr.ratio_x << ", <grad_eta Phi>/<x> >= " << gr.ratio_eta
             << (gr.pass ? " (pass)" : " (FAIL)") << "\n";
    *ctx.out << "  sup |mixed Hessian| = " << hs << "\n";
    *ctx.out << (pass ? "pass" : "FAIL") << "\n";
    return pass ? kSuccess : kValidationFailure;
  }
  const SymbolSpec s = symbol_from_registry(text, g.dim);
  ctx.manifest->add_registry("symbol", text);
  const SgReport r = sg_validate(s, box);
  row("C", r.C);
  row("C_half", r.C_half);
  *ctx.out << "validate symbol " << text << " (orders " << s.m1 << ", " << s.m2 << ")\n  " << r.describe() << "\n";
  *ctx.out << (r.violation ? "FAIL" : "pass") << "\n";
  return r.violation ? kValidationFailure : kSuccess;
}

}  // namespace fiolab::cli
