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

#include "qce/sim/random_circuit.hpp"

#include <algorithm>
#include <vector>

#include "qce/error.hpp"

namespace qce::sim {
namespace {

std::size_t below(Rng& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

GateOp random_clifford(std::size_t n_qubits, Rng& rng) {
  const std::size_t kinds = n_qubits >= 2 ? 5 : 4;
  static constexpr GateKind kClifford[] = {GateKind::X, GateKind::Z, GateKind::H, GateKind::P,
                                           GateKind::CNOT};
  const GateKind kind = kClifford[below(rng, kinds)];
  if (kind == GateKind::CNOT) {
    const std::size_t control = below(rng, n_qubits);
    std::size_t target = below(rng, n_qubits - 1);
    if (target >= control) {
      ++target;
    }
    return GateOp::cnot(control, target);
  }
  return GateOp::single(kind, below(rng, n_qubits));
}

}  // namespace

Circuit random_circuit(const RandomCircuitSpec& spec, Rng& rng) {
  if (spec.min_r > spec.max_r || spec.min_r > spec.n_gates) {
    throw UsageError("random_circuit: inconsistent R-gate bounds");
  }
  const std::size_t max_r = std::min(spec.max_r, spec.n_gates);
  const std::size_t r_total = spec.min_r + below(rng, max_r - spec.min_r + 1);

  std::vector<bool> is_r(spec.n_gates, false);
  std::vector<std::size_t> slots(spec.n_gates);
  for (std::size_t k = 0; k < slots.size(); ++k) {
    slots[k] = k;
  }
  for (std::size_t k = 0; k < r_total; ++k) {
    const std::size_t pick = k + below(rng, slots.size() - k);
    std::swap(slots[k], slots[pick]);
    is_r[slots[k]] = true;
  }

  Circuit circuit{spec.n_qubits, {}};
  circuit.ops.reserve(spec.n_gates);
  for (std::size_t k = 0; k < spec.n_gates; ++k) {
    if (is_r[k]) {
      circuit.ops.push_back(GateOp::single(GateKind::R, below(rng, spec.n_qubits)));
    } else {
      circuit.ops.push_back(random_clifford(spec.n_qubits, rng));
    }
  }
  circuit.validate();
  return circuit;
}

}  // namespace qce::sim
