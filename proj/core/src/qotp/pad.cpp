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

#include "qce/qotp/pad.hpp"

#include <vector>

#include "qce/error.hpp"

namespace qce::qotp {

using sim::GateKind;
using sim::GateOp;
using sim::PureState;

PureState encrypt(PureState state, std::size_t qubit, EncKey key) {
  if (qubit >= state.n_qubits()) {
    throw UsageError("encrypt: qubit index " + std::to_string(qubit) + " out of range");
  }
  if (key.b) {
    state.apply(GateOp::single(GateKind::Z, qubit));
  }
  if (key.a) {
    state.apply(GateOp::single(GateKind::X, qubit));
  }
  return state;
}

PureState encrypt_all(PureState state, const KeyRegister& keys) {
  if (keys.size() != state.n_qubits()) {
    throw UsageError("encrypt_all: key register size does not match the state");
  }
  for (std::size_t q = 0; q < keys.size(); ++q) {
    state = encrypt(std::move(state), q, keys[q]);
  }
  return state;
}

sim::DensityMatrix average_over_keys(const PureState& state, std::size_t qubit) {
  std::vector<std::pair<double, PureState>> members;
  members.reserve(kAllKeys.size());
  for (EncKey key : kAllKeys) {
    members.emplace_back(0.25, encrypt(state, qubit, key));
  }
  return sim::mix(members);
}

sim::DensityMatrix average_over_all_keys(const PureState& state) {
  const std::size_t n = state.n_qubits();
  const std::size_t combos = std::size_t{1} << (2 * n);
  std::vector<std::pair<double, PureState>> members;
  members.reserve(combos);
  for (std::size_t code = 0; code < combos; ++code) {
    KeyRegister keys(n);
    for (std::size_t q = 0; q < n; ++q) {
      keys[q] = kAllKeys[(code >> (2 * q)) & 3U];
    }
    members.emplace_back(1.0 / static_cast<double>(combos), encrypt_all(state, keys));
  }
  return sim::mix(members);
}

PureState aux_state(AuxSecret secret) {
  PureState s = PureState::plus();
  if (secret.y) {
    s.apply(GateOp::single(GateKind::P, 0));
  }
  if (secret.d) {
    s.apply(GateOp::single(GateKind::Z, 0));
  }
  return s;
}

}  // namespace qce::qotp
