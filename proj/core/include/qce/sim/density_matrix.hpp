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
#include <span>
#include <utility>
#include <vector>

#include "qce/sim/pure_state.hpp"

namespace qce::sim {

/// Hermitian, positive semidefinite, unit-trace operator on n qubits.
/// Uses the same little-endian qubit ordering as PureState.
class DensityMatrix {
 public:
  /// Validates the invariants (Hermitian and unit trace within 1e-12,
  /// eigenvalues >= -1e-10) and throws UsageError on violation.
  static DensityMatrix from_matrix(Matrix matrix);
  static DensityMatrix maximally_mixed(std::size_t n_qubits);

  std::size_t n_qubits() const { return n_qubits_; }
  std::size_t dimension() const { return static_cast<std::size_t>(matrix_.rows()); }
  const Matrix& matrix() const { return matrix_; }

  /// Eigen-decomposition into (weight, pure state) pairs, dropping weights
  /// below `cutoff`.
  std::vector<std::pair<double, PureState>> spectral_decomposition(double cutoff = 1e-14) const;

 private:
  DensityMatrix(std::size_t n_qubits, Matrix matrix);

  std::size_t n_qubits_;
  Matrix matrix_;
};

DensityMatrix density_of(const PureState& state);

/// Convex combination. Weights must be non-negative and sum to 1 within 1e-12.
DensityMatrix mix(std::span<const std::pair<double, DensityMatrix>> members);
DensityMatrix mix(std::span<const std::pair<double, PureState>> members);

/// Reduced state on the listed qubits (in the listed order, first = qubit 0
/// of the result).
DensityMatrix partial_trace_keep(const DensityMatrix& rho, std::span<const std::size_t> keep);

/// Half the trace norm of rho - sigma.
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

/// <psi| rho |psi>.
double fidelity(const DensityMatrix& rho, const PureState& psi);

/// Probability of each computational basis outcome (diagonal of rho).
std::vector<double> basis_probabilities(const DensityMatrix& rho);

}  // namespace qce::sim
