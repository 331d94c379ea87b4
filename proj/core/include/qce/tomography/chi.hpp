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

#include "qce/sim/density_matrix.hpp"
#include "qce/sim/gates.hpp"

namespace qce::tomography {

/// Process matrix in the Pauli operator basis (see pauli_basis_element):
///
///   E(rho) = sum_{m,n} chi_{mn} P_m rho P_n^dagger
///
/// normalized to unit trace, so a unitary process is rank one and the
/// completely depolarizing channel is I / 4^n.
class ChiMatrix {
 public:
  /// Validates: Hermitian and unit trace within 1e-10, eigenvalues >= -1e-8.
  static ChiMatrix from_matrix(std::size_t n_qubits, sim::Matrix matrix);

  std::size_t n_qubits() const { return n_qubits_; }
  const sim::Matrix& matrix() const { return matrix_; }

  /// Applies the process map to an arbitrary operator.
  sim::Matrix apply(const sim::Matrix& rho) const;

  /// sum_{mn} chi_{mn} P_n^dagger P_m - I; zero for a trace-preserving map.
  sim::Matrix trace_preservation_residual() const;

 private:
  ChiMatrix(std::size_t n_qubits, sim::Matrix matrix)
      : n_qubits_(n_qubits), matrix_(std::move(matrix)) {}

  std::size_t n_qubits_;
  sim::Matrix matrix_;
};

/// chi of U rho U^dagger: chi_{mn} = u_m conj(u_n), u_m = Tr(P_m^dagger U) / 2^n.
ChiMatrix chi_of_unitary(const sim::Matrix& unitary);

/// Ideal chi of a gate on its canonical register (qubit 0, or CNOT(0, 1)).
ChiMatrix ideal_chi(sim::GateKind gate);

ChiMatrix depolarizing_chi(std::size_t n_qubits);

/// Process fidelity. Re Tr(chi * ideal) when `ideal` is rank one; otherwise
/// the Uhlmann form (Tr sqrt(sqrt(chi) ideal sqrt(chi)))^2. Clamped to [0, 1].
double process_fidelity(const ChiMatrix& chi, const ChiMatrix& ideal);

/// Nearest (Frobenius) unit-trace positive semidefinite matrix to the
/// Hermitian part of `m`: eigenvalues are projected onto the simplex.
sim::Matrix project_to_unit_trace_psd(const sim::Matrix& m);

}  // namespace qce::tomography
