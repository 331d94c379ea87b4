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
#include <functional>
#include <vector>

#include "qce/qotp/keys.hpp"
#include "qce/sim/density_matrix.hpp"
#include "qce/sim/gates.hpp"

namespace qce::tomography {

class ChiMatrix;

struct QuantumChannel {
  std::size_t n_qubits = 1;
  std::function<sim::DensityMatrix(const sim::DensityMatrix&)> map;

  sim::DensityMatrix operator()(const sim::DensityMatrix& rho) const { return map(rho); }
};

QuantumChannel identity_channel(std::size_t n_qubits);
QuantumChannel unitary_channel(const sim::Matrix& unitary);
QuantumChannel depolarizing_channel(std::size_t n_qubits);
QuantumChannel chi_channel(const ChiMatrix& chi);

/// Canonical register for a gate: one qubit, or two for CNOT(0, 1).
sim::Circuit canonical_circuit(sim::GateKind gate);

/// Client view. The input is encrypted under every key (and, for R, every
/// auxiliary secret), processed by the server through the full protocol
/// with every measurement branch, decrypted with the updated key, and
/// averaged. Equals the ideal gate for a correct protocol.
QuantumChannel channel_of_gate_decrypted(sim::GateKind gate);

/// Server view. Same runs as the client view, but the returned register is
/// not decrypted; the server only knows the claimed input and, for R, c.
QuantumChannel channel_of_gate_server_view(sim::GateKind gate);

/// One decryption bin of the R gadget: all (a, b) runs sharing the same
/// auxiliary secret and outcome, decrypted with their updated keys.
struct RGadgetBin {
  qotp::AuxSecret aux;
  bool c;
  double weight;              // probability mass of the bin (1/8 each)
  sim::DensityMatrix output;  // normalized decrypted output
};

/// The 8 (y, d, c) bins the client sorts R-gadget data into, in order
/// (y, d, c) = 000, 001, ..., 111.
std::vector<RGadgetBin> r_gadget_decrypted_bins(const sim::DensityMatrix& input);

/// The server can at most sort by c: index 0 is c = 0, 1 is c = 1. Each
/// entry has weight 1/2 and a normalized, undecrypted output.
std::array<std::pair<double, sim::DensityMatrix>, 2> r_gadget_server_bins(
    const sim::DensityMatrix& input);

}  // namespace qce::tomography
