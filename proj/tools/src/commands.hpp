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

#ifndef FIOLAB_TOOLS_COMMANDS_HPP_
#define FIOLAB_TOOLS_COMMANDS_HPP_

#include <ostream>
#include <string>

#include "config.hpp"
#include "fiolab/quantize.hpp"
#include "manifest.hpp"

namespace fiolab::cli {

enum ExitCode : int { kSuccess = 0, kValidationFailure = 1, kNumericalFailure = 2, kInconclusive = 3 };

struct Context {
  ExperimentConfig cfg;
  RunManifest* manifest = nullptr;
  bool plot = false;
  std::ostream* out = nullptr;
};

Signal load_input(const ExperimentConfig& cfg, const GridSpec& g);
OperatorHandle make_operator(const ExperimentConfig& cfg, const GridSpec& g);

int cmd_stft(Context& ctx);
int cmd_gabor(Context& ctx, const std::string& mode);  // analysis | synthesis | bounds | dual
int cmd_norm(Context& ctx);
int cmd_apply(Context& ctx);
int cmd_matrix(Context& ctx);
int cmd_experiment(Context& ctx, const std::string& name);
// what is "phase", "symbol" or empty (try phase, then symbol).
int cmd_validate(Context& ctx, const std::string& what, const std::string& text);

}  // namespace fiolab::cli

#endif  // FIOLAB_TOOLS_COMMANDS_HPP_
