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

#include <array>
#include <cstddef>
#include <vector>

#include "qce/random.hpp"

namespace qce::qotp {

/// Pad key of one qubit: the qubit is stored as X^a Z^b |psi>.
struct EncKey {
  bool a = false;
  bool b = false;

  friend bool operator==(const EncKey&, const EncKey&) = default;
};

/// Secret bits of an auxiliary qubit P^y Z^d |+>.
struct AuxSecret {
  bool y = false;
  bool d = false;

  friend bool operator==(const AuxSecret&, const AuxSecret&) = default;
};

inline constexpr std::array<EncKey, 4> kAllKeys = {
    EncKey{false, false}, EncKey{false, true}, EncKey{true, false}, EncKey{true, true}};
inline constexpr std::array<AuxSecret, 4> kAllAuxSecrets = {
    AuxSecret{false, false}, AuxSecret{false, true}, AuxSecret{true, false}, AuxSecret{true, true}};

inline EncKey random_key(Rng& rng) {
  const bool a = rng.bit();
  const bool b = rng.bit();
  return {a, b};
}

inline AuxSecret random_aux_secret(Rng& rng) {
  const bool y = rng.bit();
  const bool d = rng.bit();
  return {y, d};
}

/// Decryption keys indexed by logical data qubit.
class KeyRegister {
 public:
  KeyRegister() = default;
  explicit KeyRegister(std::size_t n_qubits) : keys_(n_qubits) {}
  explicit KeyRegister(std::vector<EncKey> keys) : keys_(std::move(keys)) {}

  static KeyRegister random(std::size_t n_qubits, Rng& rng) {
    KeyRegister reg;
    reg.keys_.reserve(n_qubits);
    for (std::size_t q = 0; q < n_qubits; ++q) {
      reg.keys_.push_back(random_key(rng));
    }
    return reg;
  }

  std::size_t size() const { return keys_.size(); }
  EncKey& operator[](std::size_t q) { return keys_.at(q); }
  const EncKey& operator[](std::size_t q) const { return keys_.at(q); }
  const std::vector<EncKey>& keys() const { return keys_; }

  friend bool operator==(const KeyRegister&, const KeyRegister&) = default;

 private:
  std::vector<EncKey> keys_;
};

}  // namespace qce::qotp
