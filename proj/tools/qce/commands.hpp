// Copyright 2026 The qce Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

namespace qce::cli {

struct CliConfig {
  std::string subcommand;  // run | qpt | verify | report
  std::uint64_t seed = 0;
  std::int64_t shots = 10000;
  std::string mode = "exact";  // exact | sampled
  std::string circuit_path;
  std::string output_path;
  std::string gate;
  std::string view = "decrypted";  // decrypted | server
  std::string input_path;          // report
  std::string transcript_path;     // run: optional JSON-lines message log
  std::size_t mc_iterations = 100;  // qpt, sampled mode; 0 disables

  /// Throws UsageError: unknown mode, or sampled mode with shots < 1.
  void validate() const;
};

enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitUsage = 2,
};

struct CommandResult {
  int exit_code = kExitOk;
  std::string summary;     // one line for stdout
  std::string text;        // extra stdout text (tables, renderings)
  nlohmann::json document;  // written to output_path when set
};

CommandResult cmd_run(const CliConfig& config);
CommandResult cmd_qpt(const CliConfig& config);
CommandResult cmd_verify(const CliConfig& config);
CommandResult cmd_report(const CliConfig& config);

/// Dispatches on config.subcommand, converting errors into a status
/// document, and writes the output files.
CommandResult execute(const CliConfig& config);

}  // namespace qce::cli
