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
#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace qce::sim {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Dense registers are capped; every state vector has 2^n amplitudes.
inline constexpr std::size_t kMaxQubits = 12;

enum class GateKind { X, Z, H, P, R, CNOT };

inline constexpr std::array<GateKind, 6> kAllGateKinds = {
    GateKind::X, GateKind::Z, GateKind::H, GateKind::P, GateKind::R, GateKind::CNOT};

std::string_view to_string(GateKind kind);
std::optional<GateKind> parse_gate_kind(std::string_view name);

constexpr std::size_t arity(GateKind kind) { return kind == GateKind::CNOT ? 2 : 1; }
constexpr bool is_clifford(GateKind kind) { return kind != GateKind::R; }

/// Exact unitary of a gate. Single-qubit gates are 2x2. CNOT is 4x4 in the
/// control (x) target basis, i.e. row/column index = 2*control_bit + target_bit.
///
///   P = diag(1, i),  R = diag(1, e^{i pi/4}),  H = [[1, 1], [1, -1]] / sqrt(2)
Matrix gate_matrix(GateKind kind);

/// One gate applied to specific qubits. For CNOT targets = {control, target}.
struct GateOp {
  GateKind kind = GateKind::X;
  std::vector<std::size_t> targets;

  static GateOp single(GateKind kind, std::size_t qubit);
  static GateOp cnot(std::size_t control, std::size_t target);

  /// Throws UsageError unless arity, distinctness and range (< n_qubits) hold.
  void validate(std::size_t n_qubits) const;

  std::string describe() const;

  friend bool operator==(const GateOp&, const GateOp&) = default;
};

/// Ordered gate list; ops[0] is applied first (U = G_N ... G_1).
struct Circuit {
  std::size_t n_qubits = 0;
  std::vector<GateOp> ops;

  void validate() const;
  std::size_t r_count() const;

  friend bool operator==(const Circuit&, const Circuit&) = default;
};

}  // namespace qce::sim
