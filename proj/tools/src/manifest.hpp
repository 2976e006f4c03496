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

#ifndef FIOLAB_TOOLS_MANIFEST_HPP_
#define FIOLAB_TOOLS_MANIFEST_HPP_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fiolab/grid.hpp"

namespace fiolab::cli {

std::string tool_version();

std::string sha256_hex(const std::string& bytes);
std::string file_sha256(const std::filesystem::path& p);

// Run record in <out>/manifest.ini. begin() writes it with status=running and
// drops <out>/manifest.partial; finish() rewrites it and removes the marker, so
// a killed run leaves the marker behind.
class RunManifest {
 public:
  RunManifest(std::filesystem::path dir, std::vector<std::string> argv, std::string command);

  void set_config(const std::string& path, const std::string& text);
  void set_grid(const GridSpec& g) { grid_ = g; }
  void add_registry(const std::string& role, const std::string& entry);
  void set_param(const std::string& key, const std::string& value);

  void begin();
  // Records a file under the output directory and returns its full path.
  std::filesystem::path output(const std::string& name);
  void finish(int exit_code, const std::string& error = {});

  const std::filesystem::path& dir() const { return dir_; }
  static constexpr const char* kFile = "manifest.ini";
  static constexpr const char* kMarker = "manifest.partial";
  static constexpr const char* kConfigCopy = "config.ini";

 private:
  void write(const std::string& status, int exit_code, const std::string& error) const;

  std::filesystem::path dir_;
  std::vector<std::string> argv_;
  std::string command_;
  std::string config_path_, config_text_, config_digest_;
  std::optional<GridSpec> grid_;
  std::vector<std::pair<std::string, std::string>> registry_;
  std::vector<std::pair<std::string, std::string>> params_;
  std::vector<std::string> outputs_;
  std::string started_, finished_;
  bool begun_ = false;
};

struct ManifestRecord {
  std::filesystem::path dir;
  std::vector<std::string> argv;
  std::string command;
  std::string status;
  int exit_code = -1;
  std::string config_digest;  // empty when the run had no config file
  std::map<std::string, std::string> outputs;  // file name -> sha256
};

ManifestRecord read_manifest(const std::filesystem::path& file);

}  // namespace fiolab::cli

#endif  // FIOLAB_TOOLS_MANIFEST_HPP_
