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

#include "qce/sim/gates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qce/error.hpp"

namespace qce::sim {

std::string_view to_string(GateKind kind) {
  switch (kind) {
    case GateKind::X:
      return "X";
    case GateKind::Z:
      return "Z";
    case GateKind::H:
      return "H";
    case GateKind::P:
      return "P";
    case GateKind::R:
      return "R";
    case GateKind::CNOT:
      return "CNOT";
  }
  return "?";
}

std::optional<GateKind> parse_gate_kind(std::string_view name) {
  for (GateKind kind : kAllGateKinds) {
    if (to_string(kind) == name) {
      return kind;
    }
  }
  return std::nullopt;
}

Matrix gate_matrix(GateKind kind) {
  const Complex i(0.0, 1.0);
  switch (kind) {
    case GateKind::X: {
      Matrix m(2, 2);
      m << 0.0, 1.0, 1.0, 0.0;
      return m;
    }
    case GateKind::Z: {
      Matrix m(2, 2);
      m << 1.0, 0.0, 0.0, -1.0;
      return m;
    }
    case GateKind::H: {
      const double s = 1.0 / std::numbers::sqrt2;
      Matrix m(2, 2);
      m << s, s, s, -s;
      return m;
    }
    case GateKind::P: {
      Matrix m = Matrix::Zero(2, 2);
      m(0, 0) = 1.0;
      m(1, 1) = i;
      return m;
    }
    case GateKind::R: {
      Matrix m = Matrix::Zero(2, 2);
      m(0, 0) = 1.0;
      m(1, 1) = std::polar(1.0, std::numbers::pi / 4.0);
      return m;
    }
    case GateKind::CNOT: {
      Matrix m = Matrix::Zero(4, 4);
      m(0, 0) = 1.0;
      m(1, 1) = 1.0;
      m(2, 3) = 1.0;
      m(3, 2) = 1.0;
      return m;
    }
  }
  throw UsageError("unknown gate kind");
}

GateOp GateOp::single(GateKind kind, std::size_t qubit) {
  if (arity(kind) != 1) {
    throw UsageError("GateOp::single called with a two-qubit gate");
  }
  return GateOp{kind, {qubit}};
}

GateOp GateOp::cnot(std::size_t control, std::size_t target) {
  return GateOp{GateKind::CNOT, {control, target}};
}

void GateOp::validate(std::size_t n_qubits) const {
  if (targets.size() != arity(kind)) {
    throw UsageError(describe() + ": expected " + std::to_string(arity(kind)) +
                     " target(s), got " + std::to_string(targets.size()));
  }
  for (std::size_t q : targets) {
    if (q >= n_qubits) {
      throw UsageError(describe() + ": qubit index " + std::to_string(q) +
                       " out of range for " + std::to_string(n_qubits) + "-qubit register");
    }
  }
  if (targets.size() == 2 && targets[0] == targets[1]) {
    throw UsageError(describe() + ": control and target must differ");
  }
}

std::string GateOp::describe() const {
  std::string out(to_string(kind));
  out += '(';
  for (std::size_t k = 0; k < targets.size(); ++k) {
    if (k != 0) {
      out += ',';
    }
    out += std::to_string(targets[k]);
  }
  out += ')';
  return out;
}

void Circuit::validate() const {
  if (n_qubits == 0 || n_qubits > kMaxQubits) {
    throw UsageError("circuit qubit count must be in [1, " + std::to_string(kMaxQubits) + "]");
  }
  for (const GateOp& op : ops) {
    op.validate(n_qubits);
  }
}

std::size_t Circuit::r_count() const {
  return static_cast<std::size_t>(std::count_if(
      ops.begin(), ops.end(), [](const GateOp& op) { return op.kind == GateKind::R; }));
}

}  // namespace qce::sim
