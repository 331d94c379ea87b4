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

#include "qce/sim/pure_state.hpp"

namespace qce::protocol {

/// Applies a Clifford gate to the encrypted register. R is rejected with
/// UsageError; it must go through the gadget.
sim::PureState server_execute_clifford(sim::PureState reg, const sim::GateOp& op);

struct RGadgetMeasured {
  sim::PureState reg;  // data qubit collapsed to |c>, still present
  bool c;
  double probability;
};

/// First half of the R gadget on an encrypted register that already holds the
/// auxiliary qubit: R on data, CNOT(control = aux, target = data), then a
/// computational-basis measurement of the data qubit.
RGadgetMeasured server_execute_r(sim::PureState reg, std::size_t data_qubit,
                                 std::size_t aux_qubit, sim::BranchSource branch);

/// Second half: P^x on the auxiliary qubit.
sim::PureState apply_correction(sim::PureState reg, std::size_t aux_qubit, bool x);

}  // namespace qce::protocol
