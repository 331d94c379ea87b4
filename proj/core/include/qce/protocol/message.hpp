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
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "qce/qotp/keys.hpp"
#include "qce/sim/pure_state.hpp"

namespace qce::protocol {

enum class Direction { ClientToServer, ServerToClient };

enum class MessageKind { EncryptedInput, AuxQubit, OutcomeC, CorrectionX, EncryptedOutput };

std::string_view to_string(Direction direction);
std::string_view to_string(MessageKind kind);

constexpr bool carries_bit(MessageKind kind) {
  return kind == MessageKind::OutcomeC || kind == MessageKind::CorrectionX;
}

constexpr Direction direction_of(MessageKind kind) {
  return (kind == MessageKind::OutcomeC || kind == MessageKind::EncryptedOutput)
             ? Direction::ServerToClient
             : Direction::ClientToServer;
}

/// Header of one transmission as seen on the wire. Quantum payloads appear
/// only as an opaque handle; classical payloads are a single bit.
struct Message {
  std::size_t seq = 0;
  Direction direction = Direction::ClientToServer;
  MessageKind kind = MessageKind::EncryptedInput;
  std::optional<bool> bit;
  std::optional<std::string> handle;
  std::optional<std::size_t> gate_index;
};

/// After an R gadget the auxiliary qubit carries the logical data qubit.
struct RelabelRecord {
  std::size_t gate_index;
  std::size_t logical_qubit;
  std::size_t measured_physical;
  std::size_t new_physical;
};

struct RGateRecord {
  std::size_t gate_index;
  bool c;
};

struct Transcript {
  std::uint64_t seed = 0;
  std::vector<Message> messages;
  std::vector<RGateRecord> r_gates;
  std::vector<RelabelRecord> relabels;
  /// Client-private; never serialized into the message log.
  qotp::KeyRegister final_keys;
};

/// One JSON object per message; quantum payloads appear only as handles.
nlohmann::json message_to_json(const Message& message);
void write_transcript_jsonl(const Transcript& transcript, std::ostream& out);

/// What travels in one message: the header plus, for quantum messages,
/// the register itself.
struct Envelope {
  Message header;
  std::optional<sim::PureState> quantum;
};

/// In-process ordered, lossless link with at most one message in flight.
/// Every sent header is appended to the transcript.
class MessageChannel {
 public:
  explicit MessageChannel(Transcript& transcript) : transcript_(&transcript) {}

  /// Direction follows from the kind. Throws ProtocolError if a message is
  /// already in flight or the payload shape does not match the kind.
  void send(MessageKind kind, std::optional<bool> bit, std::optional<std::size_t> gate_index,
            std::optional<sim::PureState> quantum = std::nullopt,
            std::optional<std::string> handle = std::nullopt);

  /// Takes the in-flight message travelling in `direction`; throws
  /// ProtocolError if there is none or it travels the other way.
  Envelope receive(Direction direction);

  bool has_pending() const { return in_flight_.has_value(); }
  std::optional<MessageKind> pending_kind() const;

 private:
  Transcript* transcript_;
  std::optional<Envelope> in_flight_;
};

}  // namespace qce::protocol
