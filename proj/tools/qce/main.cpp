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

#include <iostream>

#include <CLI11.hpp>

#include "qce/commands.hpp"

int main(int argc, char** argv) {
  qce::cli::CliConfig config;
  CLI::App app{"qce: computing on one-time-pad encrypted qubits"};
  app.require_subcommand(1);

  auto add_common = [&config](CLI::App* cmd) {
    cmd->add_option("--seed", config.seed, "PRNG seed")->capture_default_str();
    cmd->add_option("--out", config.output_path, "Output document path");
  };
  auto add_mode = [&config](CLI::App* cmd) {
    cmd->add_option("--mode", config.mode, "exact or sampled")
        ->check(CLI::IsMember({"exact", "sampled"}))
        ->capture_default_str();
    cmd->add_option("--shots", config.shots, "Shots per setting (sampled mode)")
        ->capture_default_str();
  };

  CLI::App* run = app.add_subcommand("run", "Run a circuit through the protocol");
  add_common(run);
  add_mode(run);
  run->add_option("--circuit", config.circuit_path, "Circuit JSON file")->required();
  run->add_option("--transcript", config.transcript_path, "Write the message log (JSON lines)");

  CLI::App* qpt = app.add_subcommand("qpt", "Process tomography of one gate");
  add_common(qpt);
  add_mode(qpt);
  qpt->add_option("--gate", config.gate, "X, Z, H, P, R or CNOT")->required();
  qpt->add_option("--view", config.view, "decrypted or server")->capture_default_str();
  qpt->add_option("--mc-iterations", config.mc_iterations,
                  "Monte Carlo iterations in sampled mode (0 disables)")
      ->capture_default_str();

  CLI::App* verify = app.add_subcommand("verify", "Exhaustive key-update verification");
  add_common(verify);

  CLI::App* report = app.add_subcommand("report", "Render a chi document as text bars");
  report->add_option("--in", config.input_path, "chi document from qpt")->required();
  report->add_option("--out", config.output_path, "Write the rendering here instead of stdout");

  CLI11_PARSE(app, argc, argv);
  config.subcommand = app.get_subcommands().front()->get_name();

  const qce::cli::CommandResult result = qce::cli::execute(config);
  std::cout << result.text;
  (result.exit_code == qce::cli::kExitOk ? std::cout : std::cerr) << result.summary << '\n';
  return result.exit_code;
}
