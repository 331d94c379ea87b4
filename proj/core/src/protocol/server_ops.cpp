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

#include "qce/protocol/server_ops.hpp"

#include "qce/error.hpp"

namespace qce::protocol {

using sim::GateKind;
using sim::GateOp;
using sim::PureState;

PureState server_execute_clifford(PureState reg, const GateOp& op) {
  if (!sim::is_clifford(op.kind)) {
    throw UsageError("server_execute_clifford: " + op.describe() +
                     " is not Clifford; use the R gadget");
  }
  reg.apply(op);
  return reg;
}

RGadgetMeasured server_execute_r(PureState reg, std::size_t data_qubit, std::size_t aux_qubit,
                                 sim::BranchSource branch) {
  reg.apply(GateOp::single(GateKind::R, data_qubit));
  reg.apply(GateOp::cnot(aux_qubit, data_qubit));
  sim::Measurement m = sim::measure_z(reg, data_qubit, branch);
  return RGadgetMeasured{std::move(m.post_state), m.outcome, m.probability};
}

PureState apply_correction(PureState reg, std::size_t aux_qubit, bool x) {
  if (x) {
    reg.apply(GateOp::single(GateKind::P, aux_qubit));
  } else if (aux_qubit >= reg.n_qubits()) {
    throw UsageError("apply_correction: auxiliary qubit index out of range");
  }
  return reg;
}

}  // namespace qce::protocol
