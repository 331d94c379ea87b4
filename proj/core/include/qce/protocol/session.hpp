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

#include <cstdint>
#include <string_view>
#include <vector>

#include "qce/protocol/message.hpp"
#include "qce/protocol/parties.hpp"
#include "qce/sim/gates.hpp"
#include "qce/sim/pure_state.hpp"

namespace qce::protocol {

enum class BranchMode {
  Exact,    // enumerate every combination of R-gadget outcomes
  Sampled,  // draw outcomes from a PRNG stream derived from the seed
};

std::string_view to_string(BranchMode mode);

/// Exact mode enumerates 2^k paths; sessions with more R gates are refused.
inline constexpr std::size_t kMaxExactRGates = 16;

struct SessionConfig {
  sim::Circuit circuit;
  sim::PureState input{1};
  std::uint64_t seed = 0;
  BranchMode mode = BranchMode::Exact;

  /// Throws UsageError if the circuit is invalid or does not match the input.
  void validate() const;
};

/// One complete client/server run along a fixed branch choice.
struct PathResult {
  sim::PureState encrypted_output;  // logical qubit order, before decryption
  sim::PureState decrypted_output;
  Transcript transcript;
  std::vector<bool> c_bits;
  double probability = 1.0;
};

/// Runs the full message exchange with the given secrets.
PathResult execute_path(const sim::Circuit& circuit, const sim::PureState& input,
                        const ClientSecrets& secrets, const BranchChooser& choose,
                        std::uint64_t seed = 0);

struct BranchOutcome {
  std::vector<bool> c_bits;
  double probability;
  sim::PureState decrypted_output;
};

struct SessionResult {
  /// Output of the first path (all-zero outcomes in exact mode).
  sim::PureState decrypted_output;
  /// Transcript of that same path.
  Transcript transcript;
  /// Every executed path; a single entry in sampled mode.
  std::vector<BranchOutcome> branches;
};

/// Keys and auxiliary secrets are drawn from Rng(seed); sampled-mode outcomes
/// from Rng(seed).derive(1).
SessionResult run_session(const SessionConfig& config);

/// Trusted plaintext evaluation of the circuit.
sim::PureState reference_apply(const sim::Circuit& circuit, const sim::PureState& input);

}  // namespace qce::protocol
