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

#include "cli.hpp"

#include <filesystem>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "config.hpp"
#include "fiolab/csv.hpp"
#include "fiolab/error.hpp"
#include "fiolab/parallel.hpp"
#include "manifest.hpp"

namespace fiolab::cli {

namespace fs = std::filesystem;

namespace {

std::pair<int, double> parse_grid(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw ValidationError("--grid expects N,L");
  try {
    std::size_t u1 = 0, u2 = 0;
    const std::string a = text.substr(0, comma), b = text.substr(comma + 1);
    const int N = std::stoi(a, &u1);
    const double L = std::stod(b, &u2);
    if (u1 != a.size() || u2 != b.size()) throw std::invalid_argument(text);
    return {N, L};
  } catch (const std::exception&) {
    throw ValidationError("--grid expects N,L, got '" + text + "'");
  }
}

// Replaces the value of --name (either "--name V" or "--name=V"); appends it when absent.
void replace_option(std::vector<std::string>& args, const std::string& name, const std::string& value, bool append) {
  const std::string eq = name + "=";
  for (std::size_t i = 1; i < args.size(); ++i) {
    if (args[i] == name && i + 1 < args.size()) {
      args[i + 1] = value;
      return;
    }
    if (args[i].rfind(eq, 0) == 0) {
      args[i] = eq + value;
      return;
    }
  }
  if (append) {
    args.push_back(name);
    args.push_back(value);
  }
}

int rerun(const std::string& manifest_path, const std::string& outdir, bool out_given, std::ostream& out,
          std::ostream& err) {
  const ManifestRecord rec = read_manifest(manifest_path);
  if (rec.status == "running") throw ValidationError("rerun: the recorded run never finished");
  if (!out_given) throw ValidationError("rerun: --out is required");
  if (fs::weakly_canonical(outdir) == fs::weakly_canonical(rec.dir))
    throw ValidationError("rerun: --out must differ from the recorded output directory");
  std::vector<std::string> args = rec.argv;
  if (!rec.config_digest.empty()) {
    const fs::path copy = rec.dir / RunManifest::kConfigCopy;
    if (!fs::exists(copy)) throw ValidationError("rerun: config copy missing next to the manifest");
    if (file_sha256(copy) != rec.config_digest) throw ValidationError("rerun: config copy does not match its digest");
    replace_option(args, "--config", copy.string(), false);
  }
  replace_option(args, "--out", outdir, true);
  const int code = run_cli(args, out, err);
  bool identical = true;
  for (const auto& [name, digest] : rec.outputs) {
    const fs::path p = fs::path(outdir) / name;
    const bool same = fs::exists(p) && file_sha256(p) == digest;
    identical = identical && same;
    out << "rerun: " << name << (same ? " identical" : " DIFFERS") << "\n";
  }
  if (code != rec.exit_code) {
    out << "rerun: exit code " << code << " differs from recorded " << rec.exit_code << "\n";
    identical = false;
  }
  out << (identical ? "rerun: reproduced byte-identical outputs\n" : "rerun: outputs differ\n");
  return identical ? kSuccess : kValidationFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"fiolab: numerical lab for Fourier integral operators on modulation spaces", "fiolab"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_version_flag("--version", tool_version());

  std::string config_path, outdir = "fiolab-out", grid_text;
  bool plot = false;
  int jobs = 0;
  std::uint64_t seed = 1;
  app.add_option("--config", config_path, "Experiment configuration (INI sections, key = value)");
  auto* out_opt = app.add_option("--out", outdir, "Output directory (default fiolab-out)");
  app.add_flag("--plot", plot, "Write SVG log-log plots next to the CSV files");
  app.add_option("--jobs", jobs, "Worker threads (overrides FIOLAB_JOBS; default: all cores)")
      ->check(CLI::PositiveNumber);
  app.add_option("--grid", grid_text, "Grid override N,L");
  auto* seed_opt = app.add_option("--seed", seed, "Seed for random corpora");

  auto* c_stft = app.add_subcommand("stft", "Short-time Fourier transform of the input signal");
  auto* c_gabor = app.add_subcommand("gabor", "Gabor analysis, synthesis, frame bounds or dual window");
  std::string gabor_mode;
  c_gabor->add_option("mode", gabor_mode, "analysis | synthesis | bounds | dual")
      ->required()
      ->check(CLI::IsMember({"analysis", "synthesis", "bounds", "dual"}));
  auto* c_norm = app.add_subcommand("norm", "Weighted modulation-space norm of the input signal");
  std::string p_text, q_text;
  double s1 = 0.0, s2 = 0.0;
  auto* p_opt = c_norm->add_option("--p", p_text, "Exponent p (number or inf)");
  auto* q_opt = c_norm->add_option("--q", q_text, "Exponent q (number or inf)");
  auto* s1_opt = c_norm->add_option("--s1", s1, "Frequency weight exponent");
  auto* s2_opt = c_norm->add_option("--s2", s2, "Space weight exponent");
  auto* c_apply = app.add_subcommand("apply", "Apply the configured operator to the input signal");
  auto* c_matrix = app.add_subcommand("matrix", "Gabor matrix of the configured operator");
  auto* c_exp = app.add_subcommand("experiment", "Run a growth or boundedness experiment");
  std::string exp_name;
  c_exp->add_option("name", exp_name, "Experiment name (default: [experiment] name)")
      ->check(CLI::IsMember(experiment_names()));
  auto* c_val = app.add_subcommand("validate", "Validate a registry symbol or phase");
  std::vector<std::string> val_args;
  c_val->add_option("entry", val_args, "[phase|symbol] REGISTRY_ENTRY")->required()->expected(1, 2);
  auto* c_rerun = app.add_subcommand("rerun", "Re-run a recorded manifest and compare outputs");
  std::string manifest_path;
  c_rerun->add_option("manifest", manifest_path, "Path to manifest.ini")->required()->check(CLI::ExistingFile);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kValidationFailure;
  }

  if (jobs > 0) set_jobs(jobs);

  try {
    if (c_rerun->parsed()) return rerun(manifest_path, outdir, out_opt->count() > 0, out, err);
  } catch (const ValidationError& e) {
    err << "fiolab: " << e.what() << "\n";
    return kValidationFailure;
  }

  CLI::App* sub = app.get_subcommands().front();
  Overrides ov;
  ExperimentConfig cfg;
  try {
    if (!grid_text.empty()) ov.grid = parse_grid(grid_text);
    if (seed_opt->count()) ov.seed = seed;
    if (c_exp->parsed() && !exp_name.empty()) ov.experiment = exp_name;
    cfg = load_config(config_path, ov);
    if (p_opt->count()) cfg.p = parse_exponent(p_text);
    if (q_opt->count()) cfg.q = parse_exponent(q_text);
    if (s1_opt->count()) cfg.s1 = s1;
    if (s2_opt->count()) cfg.s2 = s2;
    if (c_exp->parsed() && cfg.experiment.empty())
      throw ValidationError("experiment: give a name or set [experiment] name");
  } catch (const ValidationError& e) {
    err << "fiolab: " << e.what() << "\n";
    return kValidationFailure;
  } catch (const NumericalError& e) {
    err << "fiolab: " << e.what() << "\n";
    return kNumericalFailure;
  }

  RunManifest manifest(outdir, args, sub->get_name());
  if (!config_path.empty()) manifest.set_config(config_path, cfg.text);
  manifest.set_grid(c_exp->parsed() ? experiment_grid(cfg) : cfg.grid_or_default());
  manifest.set_param("seed", std::to_string(cfg.seed));
  if (c_stft->parsed() || c_gabor->parsed() || c_norm->parsed() || c_apply->parsed())
    manifest.add_registry("signal", cfg.signal_file.empty() ? cfg.signal : "file:" + cfg.signal_file);
  if (c_apply->parsed() || c_matrix->parsed() || (c_exp->parsed() && cfg.experiment == "l2_stability")) {
    manifest.add_registry("operator", cfg.op_kind);
    manifest.add_registry("symbol", cfg.symbol);
    if (cfg.op_kind == "fio1" || cfg.op_kind == "fio2") manifest.add_registry("phase", cfg.phase);
  }
  if (c_norm->parsed()) {
    manifest.set_param("p", format_exponent(cfg.p));
    manifest.set_param("q", format_exponent(cfg.q));
    manifest.set_param("s1", format_double(cfg.s1));
    manifest.set_param("s2", format_double(cfg.s2));
  }
  if (c_exp->parsed()) {
    manifest.add_registry("experiment", cfg.experiment);
    manifest.add_registry("diffeo", cfg.sweep.diffeo().describe());
    manifest.set_param("p", format_exponent(cfg.exp_p));
    std::ostringstream ns;
    for (std::size_t i = 0; i < cfg.sweep.ns.size(); ++i) ns << (i ? "," : "") << cfg.sweep.ns[i];
    manifest.set_param("ns", ns.str());
  }

  Context ctx;
  ctx.cfg = cfg;
  ctx.manifest = &manifest;
  ctx.plot = plot;
  ctx.out = &out;
  int code = kSuccess;
  std::string error;
  try {
    manifest.begin();
    if (c_stft->parsed()) code = cmd_stft(ctx);
    else if (c_gabor->parsed()) code = cmd_gabor(ctx, gabor_mode);
    else if (c_norm->parsed()) code = cmd_norm(ctx);
    else if (c_apply->parsed()) code = cmd_apply(ctx);
    else if (c_matrix->parsed()) code = cmd_matrix(ctx);
    else if (c_exp->parsed()) code = cmd_experiment(ctx, cfg.experiment);
    else if (c_val->parsed())
      code = val_args.size() == 2 ? cmd_validate(ctx, val_args[0], val_args[1]) : cmd_validate(ctx, "", val_args[0]);
  } catch (const ValidationError& e) {
    code = kValidationFailure;
    error = e.what();
  } catch (const NumericalError& e) {
    code = kNumericalFailure;
    error = e.what();
  } catch (const std::exception& e) {
    code = kNumericalFailure;
    error = e.what();
  }
  if (!error.empty()) err << "fiolab: " << error << "\n";
  manifest.finish(code, error);
  return code;
}

}  // namespace fiolab::cli
