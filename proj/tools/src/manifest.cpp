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

#include "manifest.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <openssl/evp.h>

#include "fiolab/error.hpp"

#ifndef FIOLAB_VERSION_STRING
#define FIOLAB_VERSION_STRING "unknown"
#endif

namespace fiolab::cli {

namespace fs = std::filesystem;
namespace pt = boost::property_tree;

namespace {

std::string utc_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw ValidationError("cannot read '" + p.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::string tool_version() { return FIOLAB_VERSION_STRING; }

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw NumericalError("sha256: digest failed");
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return os.str();
}

std::string file_sha256(const fs::path& p) { return sha256_hex(read_file(p)); }

RunManifest::RunManifest(fs::path dir, std::vector<std::string> argv, std::string command)
    : dir_(std::move(dir)), argv_(std::move(argv)), command_(std::move(command)) {}

void RunManifest::set_config(const std::string& path, const std::string& text) {
  config_path_ = path;
  config_text_ = text;
  config_digest_ = sha256_hex(text);
}

void RunManifest::add_registry(const std::string& role, const std::string& entry) { registry_.emplace_back(role, entry); }

void RunManifest::set_param(const std::string& key, const std::string& value) { params_.emplace_back(key, value); }

void RunManifest::begin() {
  fs::create_directories(dir_);
  if (!config_path_.empty()) {
    std::ofstream out(dir_ / kConfigCopy, std::ios::binary);
    out << config_text_;
  }
  std::ofstream(dir_ / kMarker) << "started " << utc_now() << "\n";
  started_ = utc_now();
  begun_ = true;
  write("running", -1, {});
}

fs::path RunManifest::output(const std::string& name) {
  outputs_.push_back(name);
  return dir_ / name;
}

void RunManifest::finish(int exit_code, const std::string& error) {
  if (!begun_) return;
  finished_ = utc_now();
  write(exit_code == 0 ? "complete" : "failed", exit_code, error);
  fs::remove(dir_ / kMarker);
}

void RunManifest::write(const std::string& status, int exit_code, const std::string& error) const {
  pt::ptree t;
  t.put("run.tool", "fiolab");
  t.put("run.version", tool_version());
  t.put("run.command", command_);
  t.put("run.status", status);
  t.put("run.started", started_);
  if (!finished_.empty()) t.put("run.finished", finished_);
  if (exit_code >= 0) t.put("run.exit_code", exit_code);
  if (!error.empty()) t.put("run.error", error);
  for (std::size_t i = 0; i < argv_.size(); ++i) t.put("argv.arg" + std::to_string(i), argv_[i]);
  t.put("argv.count", argv_.size());
  if (!config_path_.empty()) {
    t.put("config.path", config_path_);
    t.put("config.copy", kConfigCopy);
    t.put("config.sha256", config_digest_);
  }
  if (grid_) {
    t.put("grid.dim", grid_->dim);
    t.put("grid.half_width", grid_->half_width);
    t.put("grid.samples", grid_->samples_per_axis);
  }
  for (const auto& [role, entry] : registry_) t.put(pt::ptree::path_type("registry/" + role, '/'), entry);
  for (const auto& [k, v] : params_) t.put(pt::ptree::path_type("params/" + k, '/'), v);
  if (status != "running") {
    for (std::size_t i = 0; i < outputs_.size(); ++i) {
      const fs::path p = dir_ / outputs_[i];
      t.put("outputs.file" + std::to_string(i), outputs_[i]);
      t.put("outputs.sha256_" + std::to_string(i), fs::exists(p) ? file_sha256(p) : std::string("missing"));
    }
    t.put("outputs.count", outputs_.size());
  }
  std::ofstream out(dir_ / kFile, std::ios::binary);
  pt::write_ini(out, t);
}

ManifestRecord read_manifest(const fs::path& file) {
  pt::ptree t;
  try {
    std::istringstream in(read_file(file));
    pt::read_ini(in, t);
  } catch (const pt::ini_parser_error& e) {
    throw ValidationError(std::string("manifest: ") + e.what());
  }
  ManifestRecord r;
  r.dir = file.parent_path();
  try {
    r.command = t.get<std::string>("run.command");
    r.status = t.get<std::string>("run.status");
    const auto n = t.get<std::size_t>("argv.count");
    for (std::size_t i = 0; i < n; ++i) r.argv.push_back(t.get<std::string>("argv.arg" + std::to_string(i)));
    r.exit_code = t.get<int>("run.exit_code", -1);
    r.config_digest = t.get<std::string>("config.sha256", "");
    const auto m = t.get<std::size_t>("outputs.count", 0);
    for (std::size_t i = 0; i < m; ++i)
      r.outputs[t.get<std::string>("outputs.file" + std::to_string(i))] =
          t.get<std::string>("outputs.sha256_" + std::to_string(i));
  } catch (const pt::ptree_error& e) {
    throw ValidationError(std::string("manifest: ") + e.what());
  }
  return r;
}

}  // namespace fiolab::cli
