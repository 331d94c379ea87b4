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

#include "qce/protocol/message.hpp"

#include "qce/error.hpp"

namespace qce::protocol {

std::string_view to_string(Direction direction) {
  return direction == Direction::ClientToServer ? "client->server" : "server->client";
}

std::string_view to_string(MessageKind kind) {
  switch (kind) {
    case MessageKind::EncryptedInput:
      return "EncryptedInput";
    case MessageKind::AuxQubit:
      return "AuxQubit";
    case MessageKind::OutcomeC:
      return "OutcomeC";
    case MessageKind::CorrectionX:
      return "CorrectionX";
    case MessageKind::EncryptedOutput:
      return "EncryptedOutput";
  }
  return "?";
}

nlohmann::json message_to_json(const Message& message) {
  nlohmann::json j;
  j["seq"] = message.seq;
  j["direction"] = to_string(message.direction);
  j["kind"] = to_string(message.kind);
  if (message.gate_index) {
    j["gate_index"] = *message.gate_index;
  }
  if (message.bit) {
    j["bit"] = *message.bit ? 1 : 0;
  }
  if (message.handle) {
    j["handle"] = *message.handle;
  }
  return j;
}

void write_transcript_jsonl(const Transcript& transcript, std::ostream& out) {
  for (const Message& m : transcript.messages) {
    out << message_to_json(m).dump() << '\n';
  }
}

void MessageChannel::send(MessageKind kind, std::optional<bool> bit,
                          std::optional<std::size_t> gate_index,
                          std::optional<sim::PureState> quantum,
                          std::optional<std::string> handle) {
  if (in_flight_) {
    throw ProtocolError(std::string("cannot send ") + std::string(to_string(kind)) + ": " +
                        std::string(to_string(in_flight_->header.kind)) + " still in flight");
  }
  if (carries_bit(kind) != bit.has_value()) {
    throw ProtocolError(std::string(to_string(kind)) +
                        (carries_bit(kind) ? " must carry exactly one classical bit"
                                           : " cannot carry a classical bit"));
  }
  if (carries_bit(kind) == quantum.has_value()) {
    throw ProtocolError(std::string(to_string(kind)) + ": wrong payload type");
  }
  Message header;
  header.seq = transcript_->messages.size();
  header.direction = direction_of(kind);
  header.kind = kind;
  header.bit = bit;
  header.gate_index = gate_index;
  if (quantum) {
    header.handle = handle ? std::move(handle) : std::optional<std::string>("q" + std::to_string(header.seq));
  }
  transcript_->messages.push_back(header);
  in_flight_ = Envelope{std::move(header), std::move(quantum)};
}

Envelope MessageChannel::receive(Direction direction) {
  if (!in_flight_) {
    throw ProtocolError("receive: no message in flight");
  }
  if (in_flight_->header.direction != direction) {
    throw ProtocolError("receive: " + std::string(to_string(in_flight_->header.kind)) +
                        " is addressed to the other party");
  }
  Envelope env = std::move(*in_flight_);
  in_flight_.reset();
  return env;
}

std::optional<MessageKind> MessageChannel::pending_kind() const {
  if (!in_flight_) {
    return std::nullopt;
  }
  return in_flight_->header.kind;
}

}  // namespace qce::protocol
