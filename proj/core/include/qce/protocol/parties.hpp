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
#include <functional>
#include <optional>
#include <vector>

#include "qce/protocol/message.hpp"
#include "qce/qotp/keys.hpp"
#include "qce/sim/gates.hpp"
#include "qce/sim/pure_state.hpp"

namespace qce::protocol {

/// Everything only the client knows: one pad key per data qubit and one
/// auxiliary secret per R gate, in circuit order.
struct ClientSecrets {
  qotp::KeyRegister keys;
  std::vector<qotp::AuxSecret> aux;

  /// Fresh uniform secrets for `circuit` drawn from `rng`: keys first, then
  /// aux secrets in R-gate order.
  static ClientSecrets random(const sim::Circuit& circuit, Rng& rng);
};

struct PreparedInput {
  sim::PureState encrypted;
  qotp::KeyRegister keys;
  std::vector<qotp::AuxSecret> aux_secrets;
  std::vector<sim::PureState> aux_states;
};

/// Encrypts every data qubit and builds P^y Z^d |+> for each aux secret.
PreparedInput client_prepare(const sim::Circuit& circuit, const sim::PureState& input,
                             const ClientSecrets& secrets);

/// Client state machine. Walks the agreed circuit alongside the server,
/// updating keys for Clifford gates locally and answering each OutcomeC with
/// a CorrectionX.
class Client {
 public:
  Client(sim::Circuit circuit, const sim::PureState& input, ClientSecrets secrets);

  void send_encrypted_input(MessageChannel& channel);
  std::size_t aux_count() const { return prepared_.aux_states.size(); }
  void send_aux(MessageChannel& channel, std::size_t index);

  /// Receives the OutcomeC of the next R gate, updates that qubit's key and
  /// sends x = a ^ y.
  void handle_outcome(MessageChannel& channel);

  /// Receives EncryptedOutput (logical qubit order) and decrypts it.
  sim::PureState receive_output(MessageChannel& channel);

  const qotp::KeyRegister& keys() const { return keys_; }
  const std::optional<sim::PureState>& encrypted_output() const { return encrypted_output_; }

 private:
  void advance_cliffords(std::size_t until);

  sim::Circuit circuit_;
  PreparedInput prepared_;
  qotp::KeyRegister keys_;
  std::size_t next_gate_ = 0;
  std::size_t next_aux_ = 0;
  std::optional<sim::PureState> encrypted_output_;
};

/// Chooses the measurement branch for the k-th R gadget of a session.
using BranchChooser = std::function<sim::BranchSource(std::size_t r_ordinal)>;

/// Server state machine. Holds the encrypted register and the auxiliary
/// qubits; never sees any key material.
///
/// Physical layout: the register keeps one physical slot per logical data
/// qubit. For an R gadget the next auxiliary is appended as the top qubit,
/// the measured data qubit is dropped afterwards, and the logical qubit is
/// relabelled onto the surviving auxiliary.
class Server {
 public:
  enum class Step { Applied, AwaitingCorrection, Done };

  explicit Server(sim::Circuit circuit);

  /// Accepts EncryptedInput, AuxQubit or CorrectionX.
  void receive(MessageChannel& channel);

  /// Executes the next gate. For R, runs up to the measurement, sends
  /// OutcomeC and returns AwaitingCorrection.
  Step step(MessageChannel& channel, const BranchChooser& choose);

  void send_output(MessageChannel& channel);

  bool done() const { return next_gate_ >= circuit_.ops.size() && !pending_; }
  const std::vector<std::size_t>& layout() const { return logical_to_physical_; }
  const std::vector<RelabelRecord>& relabels() const { return relabels_; }
  const std::vector<bool>& outcomes() const { return outcomes_; }
  /// Product of the Born probabilities of all measured branches.
  double path_probability() const { return path_probability_; }

 private:
  struct PendingCorrection {
    std::size_t gate_index;
    std::size_t aux_physical;
  };

  sim::Circuit circuit_;
  std::optional<sim::PureState> register_;
  std::vector<sim::PureState> aux_inbox_;
  std::size_t next_aux_ = 0;
  std::size_t next_gate_ = 0;
  std::vector<std::size_t> logical_to_physical_;
  std::optional<PendingCorrection> pending_;
  std::vector<RelabelRecord> relabels_;
  std::vector<bool> outcomes_;
  double path_probability_ = 1.0;
};

}  // namespace qce::protocol
