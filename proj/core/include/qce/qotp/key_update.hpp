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

#include <functional>
#include <utility>

#include "qce/qotp/keys.hpp"
#include "qce/sim/gates.hpp"

namespace qce::qotp {

// Key-update rules. Each returns the decryption key that is valid after the
// server applies the gate to the encrypted qubit(s). Identities hold up to
// global phase.

/// X, Z: unchanged. H: (a, b) -> (b, a). P: (a, b) -> (a, a ^ b).
/// Throws UsageError for R and CNOT.
EncKey update_clifford(sim::GateKind gate, EncKey key);

/// CNOT with control key (a, b) and target key (c, d):
/// control -> (a, b ^ d), target -> (a ^ c, d).
std::pair<EncKey, EncKey> update_cnot(EncKey control, EncKey target);

/// Key of the auxiliary qubit after the R gadget with data-qubit outcome c:
///   a'' = a ^ c
///   b'' = a (c ^ y ^ 1) ^ b ^ d ^ y
EncKey update_r(EncKey key, bool c, AuxSecret aux);

/// Bit the client sends to steer the hidden phase correction: x = a ^ y.
bool correction_bit(EncKey key, AuxSecret aux);

/// Injectable rule set, so that verification can be exercised against
/// deliberately broken rules.
struct KeyUpdateRules {
  std::function<EncKey(sim::GateKind, EncKey)> clifford = update_clifford;
  std::function<std::pair<EncKey, EncKey>(EncKey, EncKey)> cnot = update_cnot;
  std::function<EncKey(EncKey, bool, AuxSecret)> r = update_r;
  std::function<bool(EncKey, AuxSecret)> correction = correction_bit;
};

}  // namespace qce::qotp
