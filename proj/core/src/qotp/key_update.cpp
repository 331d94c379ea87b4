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

#include "qce/qotp/key_update.hpp"

#include <string>

#include "qce/error.hpp"

namespace qce::qotp {

EncKey update_clifford(sim::GateKind gate, EncKey key) {
  switch (gate) {
    case sim::GateKind::X:
    case sim::GateKind::Z:
      return key;
    case sim::GateKind::H:
      return {key.b, key.a};
    case sim::GateKind::P:
      return {key.a, key.a != key.b};
    case sim::GateKind::R:
    case sim::GateKind::CNOT:
      break;
  }
  throw UsageError("update_clifford: " + std::string(sim::to_string(gate)) +
                   " is not a single-qubit Clifford gate");
}

std::pair<EncKey, EncKey> update_cnot(EncKey control, EncKey target) {
  return {EncKey{control.a, control.b != target.b}, EncKey{control.a != target.a, target.b}};
}

EncKey update_r(EncKey key, bool c, AuxSecret aux) {
  const bool a2 = key.a != c;
  const bool b2 = (key.a && !(c != aux.y)) != (key.b != (aux.d != aux.y));
  return {a2, b2};
}

bool correction_bit(EncKey key, AuxSecret aux) { return key.a != aux.y; }

}  // namespace qce::qotp
