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

#include "qce/protocol/session.hpp"

#include <string>

#include "qce/error.hpp"

namespace qce::protocol {

std::string_view to_string(BranchMode mode) {
  return mode == BranchMode::Exact ? "exact" : "sampled";
}

void SessionConfig::validate() const {
  circuit.validate();
  if (circuit.n_qubits != input.n_qubits()) {
    throw UsageError("session: circuit has " + std::to_string(circuit.n_qubits) +
                     " qubits but the input has " + std::to_string(input.n_qubits()));
  }
  if (circuit.n_qubits + (circuit.r_count() > 0 ? 1 : 0) > sim::kMaxQubits) {
    throw UsageError("session: register would exceed the qubit cap during an R gadget");
  }
}

PathResult execute_path(const sim::Circuit& circuit, const sim::PureState& input,
                        const ClientSecrets& secrets, const BranchChooser& choose,
                        std::uint64_t seed) {
  Transcript transcript;
  transcript.seed = seed;
  MessageChannel channel(transcript);
  Client client(circuit, input, secrets);
  Server server(circuit);

  client.send_encrypted_input(channel);
  server.receive(channel);
  for (std::size_t k = 0; k < client.aux_count(); ++k) {
    client.send_aux(channel, k);
    server.receive(channel);
  }
  for (;;) {
    const Server::Step step = server.step(channel, choose);
    if (step == Server::Step::Done) {
      break;
    }
    if (step == Server::Step::AwaitingCorrection) {
      client.handle_outcome(channel);
      server.receive(channel);
    }
  }
  server.send_output(channel);
  sim::PureState decrypted = client.receive_output(channel);

  for (const Message& m : transcript.messages) {
    if (m.kind == MessageKind::OutcomeC) {
      transcript.r_gates.push_back(RGateRecord{*m.gate_index, *m.bit});
    }
  }
  transcript.relabels = server.relabels();
  transcript.final_keys = client.keys();
  return PathResult{*client.encrypted_output(), std::move(decrypted), std::move(transcript),
                    server.outcomes(), server.path_probability()};
}

SessionResult run_session(const SessionConfig& config) {
  config.validate();
  Rng client_rng(config.seed);
  const ClientSecrets secrets = ClientSecrets::random(config.circuit, client_rng);

  if (config.mode == BranchMode::Sampled) {
    Rng nature = Rng(config.seed).derive(1);
    PathResult path = execute_path(
        config.circuit, config.input, secrets,
        [&nature](std::size_t) { return sim::BranchSource::sample(nature); }, config.seed);
    SessionResult result{path.decrypted_output, std::move(path.transcript), {}};
    result.branches.push_back(
        BranchOutcome{std::move(path.c_bits), path.probability, std::move(path.decrypted_output)});
    return result;
  }

  const std::size_t n_r = config.circuit.r_count();
  if (n_r > kMaxExactRGates) {
    throw UsageError("exact mode supports at most " + std::to_string(kMaxExactRGates) +
                     " R gates; use sampled mode");
  }
  std::optional<SessionResult> result;
  const std::size_t n_paths = std::size_t{1} << n_r;
  for (std::size_t code = 0; code < n_paths; ++code) {
    PathResult path = execute_path(
        config.circuit, config.input, secrets,
        [code](std::size_t r) { return sim::BranchSource::forced(((code >> r) & 1U) != 0); },
        config.seed);
    if (!result) {
      result = SessionResult{path.decrypted_output, std::move(path.transcript), {}};
      result->branches.reserve(n_paths);
    }
    result->branches.push_back(
        BranchOutcome{std::move(path.c_bits), path.probability, std::move(path.decrypted_output)});
  }
  return std::move(*result);
}

sim::PureState reference_apply(const sim::Circuit& circuit, const sim::PureState& input) {
  circuit.validate();
  return sim::apply_circuit(input, circuit);
}

}  // namespace qce::protocol
