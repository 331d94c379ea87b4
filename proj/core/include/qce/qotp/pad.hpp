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

#include "qce/qotp/keys.hpp"
#include "qce/sim/density_matrix.hpp"
#include "qce/sim/pure_state.hpp"

namespace qce::qotp {

/// Applies X^a Z^b to `qubit` (Z^b first, then X^a).
sim::PureState encrypt(sim::PureState state, std::size_t qubit, EncKey key);

/// Same map as encrypt; recovers the plaintext up to a global phase.
inline sim::PureState decrypt(sim::PureState state, std::size_t qubit, EncKey key) {
  return encrypt(std::move(state), qubit, key);
}

/// Encrypts/decrypts every qubit q under keys[q].
sim::PureState encrypt_all(sim::PureState state, const KeyRegister& keys);
inline sim::PureState decrypt_all(sim::PureState state, const KeyRegister& keys) {
  return encrypt_all(std::move(state), keys);
}

/// Uniform mixture of the four encryptions of `qubit`. The reduced state on
/// that qubit is I/2 for every input.
sim::DensityMatrix average_over_keys(const sim::PureState& state, std::size_t qubit);

/// Uniform mixture over all 4^n keys of the register.
sim::DensityMatrix average_over_all_keys(const sim::PureState& state);

/// Auxiliary qubit P^y Z^d |+>: one of |+>, |->, |+_y>, |-_y>.
sim::PureState aux_state(AuxSecret secret);

}  // namespace qce::qotp
