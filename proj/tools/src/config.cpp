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

#include "config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "fiolab/error.hpp"
#include "fiolab/gabor.hpp"
#include "fiolab/generators.hpp"
#include "fiolab/modnorm.hpp"
#include "fiolab/phases.hpp"
#include "fiolab/symbols.hpp"

namespace fiolab::cli {

namespace pt = boost::property_tree;

namespace {

const std::map<std::string, std::set<std::string>>& schema() {
  static const std::map<std::string, std::set<std::string>> s{
      {"grid", {"dim", "half_width", "samples"}},
      {"window", {"kind", "a"}},
      {"lattice", {"alpha", "beta"}},
      {"input", {"signal", "file"}},
      {"operator", {"kind", "symbol", "phase"}},
      {"norm", {"p", "q", "s1", "s2", "spacing"}},
      {"matrix", {"radius_k", "radius_n", "format", "zero_threshold", "spot_checks"}},
      {"experiment", {"name", "p", "m", "m1", "m2", "ns", "c", "center", "width", "chi_lo", "chi_hi", "spacing",
                      "cases", "sizes"}},
      {"run", {"seed"}},
  };
  return s;
}

std::string trim(const std::string& t) {
  const auto b = t.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = t.find_last_not_of(" \t\r");
  return t.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(t, &used);
  } catch (const std::exception&) {
    throw ValidationError("config: " + key + ": not a number: '" + text + "'");
  }
  if (used != t.size() || !std::isfinite(v)) throw ValidationError("config: " + key + ": not a number: '" + text + "'");
  return v;
}

long long to_int(const std::string& key, const std::string& text) {
  const double v = to_double(key, text);
  if (v != std::floor(v) || std::abs(v) > 9e15) throw ValidationError("config: " + key + ": not an integer");
  return static_cast<long long>(v);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<double> to_list(const std::string& key, const std::string& text) {
  std::vector<double> out;
  for (const auto& item : split(text, ',')) out.push_back(to_double(key, item));
  if (out.empty()) throw ValidationError("config: " + key + ": empty list");
  return out;
}

void validate(ExperimentConfig& c) {
  if (c.window_a <= 0.0) throw ValidationError("config: window.a must be positive");
  if (c.p < 1.0 || c.q < 1.0) throw ValidationError("config: norm exponents must be >= 1");
  if (c.spacing && !(*c.spacing > 0.0)) throw ValidationError("config: norm.spacing must be positive");
  if (c.radius_k < -1 || c.radius_n < -1) throw ValidationError("config: matrix radii must be >= 0");
  if ((c.radius_k < 0) != (c.radius_n < 0)) throw ValidationError("config: set both matrix.radius_k and matrix.radius_n");
  if (c.matrix_format != "csv" && c.matrix_format != "binary" && c.matrix_format != "both")
    throw ValidationError("config: matrix.format must be csv, binary or both");
  if (c.zero_threshold < 0.0) throw ValidationError("config: matrix.zero_threshold must be >= 0");
  if (c.spot_checks < 0) throw ValidationError("config: matrix.spot_checks must be >= 0");
  static const std::set<std::string> kinds{"kn", "weyl", "fio1", "fio2"};
  if (!kinds.count(c.op_kind)) throw ValidationError("config: operator.kind must be kn, weyl, fio1 or fio2");

  symbol_from_registry(c.symbol, c.dim);
  phase_from_registry(c.phase, c.dim);
  if (c.signal_file.empty()) input_generator(c.signal, c.dim, c.seed);

  if (c.grid) {
    if (c.grid->dim != c.dim) throw ValidationError("config: grid.dim mismatch");
    make_lattice(*c.grid, c.alpha, c.beta);
    if (c.spacing) {
      const double rx = *c.spacing / c.grid->space_step(), re = *c.spacing / c.grid->freq_step();
      if (std::abs(rx - std::round(rx)) > 1e-9 || std::abs(re - std::round(re)) > 1e-9)
        throw ValidationError("config: norm.spacing must be a multiple of dx and deta");
    }
  }

  if (c.experiment.empty()) return;
  const auto& names = experiment_names();
  if (std::find(names.begin(), names.end(), c.experiment) == names.end())
    throw ValidationError("config: unknown experiment '" + c.experiment + "'");
  if (c.exp_p < 1.0) throw ValidationError("config: experiment.p must be >= 1");
  if (c.sweep.ns.size() < 2) throw ValidationError("config: experiment.ns needs at least two values");
  for (double n : c.sweep.ns)
    if (!(n > 0.0)) throw ValidationError("config: experiment.ns must be positive");
  if (!(c.sweep.chi_hi > c.sweep.chi_lo)) throw ValidationError("config: experiment.chi_hi must exceed chi_lo");
  if (!(c.sweep.spacing > 0.0)) throw ValidationError("config: experiment.spacing must be positive");
  const Diffeo phi = c.sweep.diffeo();
  if (c.experiment == "l2_stability") {
    for (int n : c.sizes)
      if (n < 2 || n % 2) throw ValidationError("config: experiment.sizes must be even and >= 2");
    return;
  }
  const std::string& e = c.experiment;
  const double p = c.exp_p;
  if ((e == "fl_growth" || e == "sharpness_m1" || e == "sharpness_m2") && p > 2.0)
    throw ValidationError("config: " + e + " needs 1 <= p <= 2");
  if (e == "theorem_mo" && !(p > 2.0 && std::isfinite(p))) throw ValidationError("config: theorem_mo needs 2 < p < inf");
  if (e == "casolp" && !std::isfinite(p)) throw ValidationError("config: casolp needs a finite p");
  if (e == "boundedness_suite") {
    const double t = -threshold_gap(p, c.dim);
    for (const auto& sc : c.cases)
      if (sc.m1 > t + 1e-12 || sc.m2 > t + 1e-12)
        throw ValidationError("config: boundedness_suite case (" + format_exponent(sc.m1) + "," +
                              format_exponent(sc.m2) + ") lies above the threshold " + format_exponent(t));
  }
  // The L^p experiments place f_n on the Fourier side.
  const bool spectral = e == "theorem_mo" || e == "casolp";
  const GridSpec g = spectral ? experiment_grid(c).dual() : experiment_grid(c);
  const double nyq = g.nyquist();
  for (double n : c.sweep.ns) {
    if (n > 0.5 * nyq)
      throw ValidationError("config: experiment.ns value " + format_exponent(n) + " exceeds half the Nyquist frequency " +
                            format_exponent(nyq) + " of " + g.describe());
    if (c.experiment == "fl_growth" && n * phi.max_d1() > 0.9 * nyq)
      throw ValidationError("config: experiment.ns value " + format_exponent(n) +
                            " leaves the band 0.9 Nyquist after the diffeomorphism");
  }
}

}  // namespace

GridSpec experiment_grid(const ExperimentConfig& c) {
  if (c.sweep.grid) return *c.sweep.grid;
  const std::string& n = c.experiment;
  if (n == "fl_growth") return fl_growth_grid(c.dim);
  if (n == "theorem_mo" || n == "casolp") return lp_grid();
  if (n == "l2_stability") return c.grid_or_default();
  return modulation_grid();
}

GridSpec ExperimentConfig::grid_or_default() const {
  return grid ? *grid : GridSpec::make(dim, 16.0, 1024);
}

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> n{"fl_growth",    "multiplier_growth", "theorem_mo",        "casolp",
                                          "sharpness_m1", "sharpness_m2",      "boundedness_suite", "l2_stability"};
  return n;
}

double parse_exponent(const std::string& text) {
  const std::string t = trim(text);
  if (t == "inf" || t == "infinity" || t == "Inf") return kInf;
  const double p = to_double("exponent", t);
  if (p < 1.0) throw ValidationError("exponent must be >= 1 or inf");
  return p;
}

std::string format_exponent(double p) {
  if (std::isinf(p)) return "inf";
  std::ostringstream os;
  os << p;
  return os.str();
}

Generator input_generator(const std::string& text, int d, std::uint64_t seed) {
  const RegistryCall c = parse_registry_call(text);
  auto want = [&](std::size_t lo, std::size_t hi) {
    if (c.args.size() < lo || c.args.size() > hi) throw ValidationError("input: wrong argument count in '" + text + "'");
  };
  auto lift = [d](Generator g) { return d == 1 ? g : gen::tensor_power(g, d); };
  if (c.name == "gaussian") {
    want(0, 1);
    const double a = c.args.empty() ? 1.0 : c.args[0];
    if (!(a > 0.0)) throw ValidationError("input: gaussian width must be positive");
    return gen::gaussian(d, a);
  }
  if (c.name == "bump") {
    want(0, 2);
    if (c.args.size() == 1) throw ValidationError("input: bump takes (lo,hi)");
    return c.args.empty() ? lift(gen::bump()) : lift(gen::bump(c.args[0], c.args[1]));
  }
  if (c.name == "fn") {
    want(1, 3);
    if (c.args.size() == 2) throw ValidationError("input: fn takes (n) or (n,lo,hi)");
    return c.args.size() == 1 ? make_fn(c.args[0], d) : make_fn(c.args[0], d, c.args[1], c.args[2]);
  }
  if (c.name == "fejer") {
    want(1, 1);
    return lift(gen::fejer(c.args[0]));
  }
  if (c.name == "random_schwartz") {
    want(0, 1);
    const int terms = c.args.empty() ? 4 : static_cast<int>(c.args[0]);
    if (terms < 1) throw ValidationError("input: random_schwartz needs at least one term");
    return gen::random_schwartz(d, seed, terms);
  }
  throw ValidationError("input: unknown signal '" + c.name + "'");
}

ExperimentConfig parse_config(const std::string& text, const std::string& path, const Overrides& ov) {
  ExperimentConfig c;
  c.path = path;
  c.text = text;
  pt::ptree tree;
  try {
    std::istringstream in(text);
    pt::ini_parser::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ValidationError(std::string("config: ") + e.what());
  }
  std::map<std::string, std::string> kv;
  for (const auto& [section, body] : tree) {
    const auto it = schema().find(section);
    if (body.empty() && !body.data().empty()) throw ValidationError("config: key '" + section + "' outside a section");
    if (it == schema().end()) throw ValidationError("config: unknown section [" + section + "]");
    for (const auto& [key, value] : body) {
      if (!it->second.count(key)) throw ValidationError("config: unknown key '" + key + "' in [" + section + "]");
      kv[section + "." + key] = value.get_value<std::string>();
    }
  }
  auto has = [&](const char* k) { return kv.count(k) > 0; };
  auto str = [&](const char* k) { return trim(kv.at(k)); };
  auto num = [&](const char* k) { return to_double(k, kv.at(k)); };
  auto integer = [&](const char* k) { return to_int(k, kv.at(k)); };

  if (has("grid.dim")) c.dim = static_cast<int>(integer("grid.dim"));
  if (has("grid.half_width") != has("grid.samples"))
    throw ValidationError("config: [grid] needs both half_width and samples");
  if (has("grid.samples")) c.grid = GridSpec::make(c.dim, num("grid.half_width"), static_cast<int>(integer("grid.samples")));
  if (ov.grid) c.grid = GridSpec::make(c.dim, ov.grid->second, ov.grid->first);
  if (c.dim < 1 || c.dim > 3) throw ValidationError("config: grid.dim must be 1, 2 or 3");

  if (has("window.kind") && str("window.kind") != "gaussian") throw ValidationError("config: window.kind must be gaussian");
  if (has("window.a")) c.window_a = num("window.a");
  if (has("lattice.alpha")) c.alpha = num("lattice.alpha");
  if (has("lattice.beta")) c.beta = num("lattice.beta");
  if (has("input.signal")) c.signal = str("input.signal");
  if (has("input.file")) c.signal_file = str("input.file");
  if (has("operator.kind")) c.op_kind = str("operator.kind");
  if (has("operator.symbol")) c.symbol = str("operator.symbol");
  if (has("operator.phase")) c.phase = str("operator.phase");
  if (has("norm.p")) c.p = parse_exponent(str("norm.p"));
  if (has("norm.q")) c.q = parse_exponent(str("norm.q"));
  if (has("norm.s1")) c.s1 = num("norm.s1");
  if (has("norm.s2")) c.s2 = num("norm.s2");
  if (has("norm.spacing")) c.spacing = num("norm.spacing");
  if (has("matrix.radius_k")) c.radius_k = static_cast<int>(integer("matrix.radius_k"));
  if (has("matrix.radius_n")) c.radius_n = static_cast<int>(integer("matrix.radius_n"));
  if (has("matrix.format")) c.matrix_format = str("matrix.format");
  if (has("matrix.zero_threshold")) c.zero_threshold = num("matrix.zero_threshold");
  if (has("matrix.spot_checks")) c.spot_checks = static_cast<int>(integer("matrix.spot_checks"));

  if (has("experiment.name")) c.experiment = str("experiment.name");
  if (ov.experiment) c.experiment = *ov.experiment;
  if (has("experiment.p")) c.exp_p = parse_exponent(str("experiment.p"));
  if (has("experiment.m")) c.m = num("experiment.m");
  if (has("experiment.m1")) c.m1 = num("experiment.m1");
  if (has("experiment.m2")) c.m2 = num("experiment.m2");
  if (has("experiment.ns")) c.sweep.ns = to_list("experiment.ns", kv.at("experiment.ns"));
  if (has("experiment.c")) c.sweep.c = num("experiment.c");
  if (has("experiment.center")) c.sweep.center = num("experiment.center");
  if (has("experiment.width")) c.sweep.width = num("experiment.width");
  if (has("experiment.chi_lo")) c.sweep.chi_lo = num("experiment.chi_lo");
  if (has("experiment.chi_hi")) c.sweep.chi_hi = num("experiment.chi_hi");
  if (has("experiment.spacing")) c.sweep.spacing = num("experiment.spacing");
  if (has("experiment.sizes")) {
    c.sizes.clear();
    for (double v : to_list("experiment.sizes", kv.at("experiment.sizes"))) {
      if (v != std::floor(v)) throw ValidationError("config: experiment.sizes must be integers");
      c.sizes.push_back(static_cast<int>(v));
    }
  }
  if (has("experiment.cases")) {
    // m1 m2 phase; m1 m2 phase; ...
    for (const auto& item : split(kv.at("experiment.cases"), ';')) {
      std::istringstream is(item);
      std::string a, b, ph;
      is >> a >> b >> ph;
      std::string rest;
      if (ph.empty() || (is >> rest)) throw ValidationError("config: experiment.cases entry '" + item + "' is not 'm1 m2 phase'");
      c.cases.push_back(SuiteCase{to_double("experiment.cases", a), to_double("experiment.cases", b), ph});
      phase_from_registry(ph, 1);
    }
  }
  if (has("run.seed")) {
    const long long s = integer("run.seed");
    if (s < 0) throw ValidationError("config: run.seed must be >= 0");
    c.seed = static_cast<std::uint64_t>(s);
  }
  if (ov.seed) c.seed = *ov.seed;
  c.sweep.grid = c.grid;
  validate(c);
  return c;
}

ExperimentConfig load_config(const std::string& path, const Overrides& ov) {
  if (path.empty()) return parse_config("", "", ov);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("config: cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), path, ov);
}

}  // namespace fiolab::cli
