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

#include "qce/protocol/parties.hpp"

#include <string>

#include "qce/error.hpp"
#include "qce/protocol/server_ops.hpp"
#include "qce/qotp/key_update.hpp"
#include "qce/qotp/pad.hpp"

namespace qce::protocol {

using sim::GateKind;
using sim::GateOp;
using sim::PureState;

ClientSecrets ClientSecrets::random(const sim::Circuit& circuit, Rng& rng) {
  ClientSecrets secrets;
  secrets.keys = qotp::KeyRegister::random(circuit.n_qubits, rng);
  const std::size_t n_r = circuit.r_count();
  secrets.aux.reserve(n_r);
  for (std::size_t k = 0; k < n_r; ++k) {
    secrets.aux.push_back(qotp::random_aux_secret(rng));
  }
  return secrets;
}

PreparedInput client_prepare(const sim::Circuit& circuit, const PureState& input,
                             const ClientSecrets& secrets) {
  circuit.validate();
  if (input.n_qubits() != circuit.n_qubits) {
    throw UsageError("client_prepare: input has " + std::to_string(input.n_qubits()) +
                     " qubits, circuit expects " + std::to_string(circuit.n_qubits));
  }
  if (secrets.keys.size() != circuit.n_qubits) {
    throw UsageError("client_prepare: need one key per data qubit");
  }
  if (secrets.aux.size() != circuit.r_count()) {
    throw UsageError("client_prepare: need one auxiliary secret per R gate");
  }
  PreparedInput prepared{qotp::encrypt_all(input, secrets.keys), secrets.keys, secrets.aux, {}};
  prepared.aux_states.reserve(secrets.aux.size());
  for (const qotp::AuxSecret& aux : secrets.aux) {
    prepared.aux_states.push_back(qotp::aux_state(aux));
  }
  return prepared;
}

// ---------------------------------------------------------------------------
// Client

Client::Client(sim::Circuit circuit, const PureState& input, ClientSecrets secrets)
    : circuit_(std::move(circuit)),
      prepared_(client_prepare(circuit_, input, secrets)),
      keys_(prepared_.keys) {}

void Client::send_encrypted_input(MessageChannel& channel) {
  channel.send(MessageKind::EncryptedInput, std::nullopt, std::nullopt, prepared_.encrypted,
               "input");
}

void Client::send_aux(MessageChannel& channel, std::size_t index) {
  channel.send(MessageKind::AuxQubit, std::nullopt, std::nullopt,
               prepared_.aux_states.at(index), "aux" + std::to_string(index));
}

void Client::advance_cliffords(std::size_t until) {
  for (; next_gate_ < until; ++next_gate_) {
    const GateOp& op = circuit_.ops[next_gate_];
    switch (op.kind) {
      case GateKind::R:
        throw ProtocolError("client: no outcome received for R gate " +
                            std::to_string(next_gate_));
      case GateKind::CNOT: {
        auto [control, target] = qotp::update_cnot(keys_[op.targets[0]], keys_[op.targets[1]]);
        keys_[op.targets[0]] = control;
        keys_[op.targets[1]] = target;
        break;
      }
      default:
        keys_[op.targets[0]] = qotp::update_clifford(op.kind, keys_[op.targets[0]]);
        break;
    }
  }
}

void Client::handle_outcome(MessageChannel& channel) {
  Envelope env = channel.receive(Direction::ServerToClient);
  if (env.header.kind != MessageKind::OutcomeC || !env.header.gate_index) {
    throw ProtocolError("client: expected OutcomeC, got " +
                        std::string(to_string(env.header.kind)));
  }
  const std::size_t gate = *env.header.gate_index;
  if (gate >= circuit_.ops.size() || gate < next_gate_ ||
      circuit_.ops[gate].kind != GateKind::R) {
    throw ProtocolError("client: OutcomeC for unexpected gate " + std::to_string(gate));
  }
  advance_cliffords(gate);
  if (next_aux_ >= prepared_.aux_secrets.size()) {
    throw ProtocolError("client: more R outcomes than auxiliary qubits");
  }
  const qotp::AuxSecret aux = prepared_.aux_secrets[next_aux_++];
  const std::size_t q = circuit_.ops[gate].targets[0];
  const qotp::EncKey key = keys_[q];
  const bool x = qotp::correction_bit(key, aux);
  keys_[q] = qotp::update_r(key, *env.header.bit, aux);
  next_gate_ = gate + 1;
  channel.send(MessageKind::CorrectionX, x, gate);
}

PureState Client::receive_output(MessageChannel& channel) {
  Envelope env = channel.receive(Direction::ServerToClient);
  if (env.header.kind != MessageKind::EncryptedOutput || !env.quantum) {
    throw ProtocolError("client: expected EncryptedOutput, got " +
                        std::string(to_string(env.header.kind)));
  }
  advance_cliffords(circuit_.ops.size());
  encrypted_output_ = *env.quantum;
  return qotp::decrypt_all(std::move(*env.quantum), keys_);
}

// ---------------------------------------------------------------------------
// Server

Server::Server(sim::Circuit circuit) : circuit_(std::move(circuit)) { circuit_.validate(); }

void Server::receive(MessageChannel& channel) {
  Envelope env = channel.receive(Direction::ClientToServer);
  switch (env.header.kind) {
    case MessageKind::EncryptedInput:
      if (register_) {
        throw ProtocolError("server: encrypted input already received");
      }
      if (env.quantum->n_qubits() != circuit_.n_qubits) {
        throw ProtocolError("server: encrypted input has the wrong number of qubits");
      }
      register_ = std::move(*env.quantum);
      logical_to_physical_.resize(circuit_.n_qubits);
      for (std::size_t q = 0; q < circuit_.n_qubits; ++q) {
        logical_to_physical_[q] = q;
      }
      return;
    case MessageKind::AuxQubit:
      if (env.quantum->n_qubits() != 1) {
        throw ProtocolError("server: auxiliary payload must be a single qubit");
      }
      aux_inbox_.push_back(std::move(*env.quantum));
      return;
    case MessageKind::CorrectionX: {
      if (!pending_) {
        throw ProtocolError("server: correction received before outcome emitted");
      }
      if (env.header.gate_index != pending_->gate_index) {
        throw ProtocolError("server: correction is for a different gate");
      }
      register_ = apply_correction(std::move(*register_), pending_->aux_physical, *env.header.bit);
      pending_.reset();
      return;
    }
    case MessageKind::OutcomeC:
    case MessageKind::EncryptedOutput:
      break;
  }
  throw ProtocolError("server: unexpected " + std::string(to_string(env.header.kind)));
}

Server::Step Server::step(MessageChannel& channel, const BranchChooser& choose) {
  if (!register_) {
    throw ProtocolError("server: no encrypted input received");
  }
  if (pending_) {
    throw ProtocolError("server: awaiting correction for gate " +
                        std::to_string(pending_->gate_index));
  }
  if (next_gate_ >= circuit_.ops.size()) {
    return Step::Done;
  }
  const std::size_t gate = next_gate_++;
  const GateOp& op = circuit_.ops[gate];
  if (op.kind != GateKind::R) {
    GateOp physical = op;
    for (std::size_t& t : physical.targets) {
      t = logical_to_physical_[t];
    }
    register_ = server_execute_clifford(std::move(*register_), physical);
    return Step::Applied;
  }

  if (next_aux_ >= aux_inbox_.size()) {
    throw ProtocolError("server: circuit references more auxiliary qubits than supplied (gate " +
                        std::to_string(gate) + ")");
  }
  const std::size_t r_ordinal = next_aux_;
  const std::size_t logical = op.targets[0];
  const std::size_t data = logical_to_physical_[logical];
  const std::size_t aux = register_->n_qubits();
  PureState reg = sim::tensor(aux_inbox_[next_aux_++], *register_);
  RGadgetMeasured measured = server_execute_r(std::move(reg), data, aux, choose(r_ordinal));
  outcomes_.push_back(measured.c);
  path_probability_ *= measured.probability;

  register_ = sim::remove_qubit(measured.reg, data, measured.c);
  const std::size_t new_physical = aux - 1;
  for (std::size_t& p : logical_to_physical_) {
    if (p > data) {
      --p;
    }
  }
  logical_to_physical_[logical] = new_physical;
  relabels_.push_back(RelabelRecord{gate, logical, data, new_physical});
  pending_ = PendingCorrection{gate, new_physical};
  channel.send(MessageKind::OutcomeC, measured.c, gate);
  return Step::AwaitingCorrection;
}

void Server::send_output(MessageChannel& channel) {
  if (!register_ || !done()) {
    throw ProtocolError("server: computation not finished");
  }
  PureState logical = sim::permute_qubits(*register_, logical_to_physical_);
  channel.send(MessageKind::EncryptedOutput, std::nullopt, std::nullopt, std::move(logical),
               "output");
}

}  // namespace qce::protocol
