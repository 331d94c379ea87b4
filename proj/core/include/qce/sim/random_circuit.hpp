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

#include "qce/random.hpp"
#include "qce/sim/gates.hpp"

namespace qce::sim {

struct RandomCircuitSpec {
  std::size_t n_qubits = 3;
  std::size_t n_gates = 20;
  std::size_t min_r = 0;
  std::size_t max_r = 20;
};

/// Uniformly mixes all six gate kinds (CNOT only when n_qubits >= 2) and
/// then places between min_r and max_r R gates at random positions.
Circuit random_circuit(const RandomCircuitSpec& spec, Rng& rng);

}  // namespace qce::sim
