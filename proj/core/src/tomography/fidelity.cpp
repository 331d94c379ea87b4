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

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "qce/error.hpp"
#include "qce/tomography/chi.hpp"
#include "qce/tomography/pauli.hpp"

namespace qce::tomography {

using sim::Complex;
using sim::Matrix;

namespace {

constexpr double kHermitianTolerance = 1e-10;
constexpr double kTraceTolerance = 1e-10;
constexpr double kEigenFloor = -1e-8;

std::size_t qubits_of_chi_dimension(Eigen::Index dim) {
  for (std::size_t n = 1; n <= 2; ++n) {
    if (static_cast<Eigen::Index>(pauli_basis_size(n)) == dim) {
      return n;
    }
  }
  throw UsageError("chi matrices are supported for 1 or 2 qubits only");
}

Matrix psd_sqrt(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (m + m.adjoint()));
  const Eigen::VectorXd roots = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return solver.eigenvectors() * roots.asDiagonal() * solver.eigenvectors().adjoint();
}

}  // namespace

ChiMatrix ChiMatrix::from_matrix(std::size_t n_qubits, Matrix matrix) {
  if (matrix.rows() != matrix.cols() ||
      qubits_of_chi_dimension(matrix.rows()) != n_qubits) {
    throw UsageError("chi matrix must be 4^n x 4^n for n = " + std::to_string(n_qubits));
  }
  const double herm_dev = (matrix - matrix.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev > kHermitianTolerance) {
    throw UsageError("chi matrix is not Hermitian (deviation " + std::to_string(herm_dev) + ")");
  }
  const Complex tr = matrix.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > kTraceTolerance) {
    throw UsageError("chi matrix trace is " + std::to_string(tr.real()) + ", expected 1");
  }
  Matrix herm = 0.5 * (matrix + matrix.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(herm, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < kEigenFloor) {
    throw UsageError("chi matrix is not positive semidefinite (eigenvalue " +
                     std::to_string(solver.eigenvalues().minCoeff()) + ")");
  }
  return ChiMatrix(n_qubits, std::move(herm));
}

Matrix ChiMatrix::apply(const Matrix& rho) const {
  const std::vector<Matrix> basis = pauli_basis(n_qubits_);
  Matrix out = Matrix::Zero(rho.rows(), rho.cols());
  for (std::size_t m = 0; m < basis.size(); ++m) {
    const Matrix left = basis[m] * rho;
    for (std::size_t n = 0; n < basis.size(); ++n) {
      const Complex c = matrix_(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n));
      if (c != Complex(0.0, 0.0)) {
        out += c * left * basis[n].adjoint();
      }
    }
  }
  return out;
}

Matrix ChiMatrix::trace_preservation_residual() const {
  const std::vector<Matrix> basis = pauli_basis(n_qubits_);
  const auto dim = basis.front().rows();
  Matrix out = -Matrix::Identity(dim, dim);
  for (std::size_t m = 0; m < basis.size(); ++m) {
    for (std::size_t n = 0; n < basis.size(); ++n) {
      out += matrix_(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n)) *
             basis[n].adjoint() * basis[m];
    }
  }
  return out;
}

ChiMatrix chi_of_unitary(const Matrix& unitary) {
  const std::size_t n = unitary.rows() == 2 ? 1 : unitary.rows() == 4 ? 2 : 0;
  if (n == 0 || unitary.cols() != unitary.rows()) {
    throw UsageError("chi_of_unitary: expected a 2x2 or 4x4 unitary");
  }
  const std::vector<Matrix> basis = pauli_basis(n);
  sim::Vector u(static_cast<Eigen::Index>(basis.size()));
  for (std::size_t m = 0; m < basis.size(); ++m) {
    u(static_cast<Eigen::Index>(m)) =
        (basis[m].adjoint() * unitary).trace() / static_cast<double>(unitary.rows());
  }
  return ChiMatrix::from_matrix(n, u * u.adjoint());
}

ChiMatrix ideal_chi(sim::GateKind gate) {
  if (gate != sim::GateKind::CNOT) {
    return chi_of_unitary(sim::gate_matrix(gate));
  }
  // gate_matrix(CNOT) is ordered control (x) target with the control as the
  // high bit; the canonical register puts the control on qubit 0 (low bit).
  Matrix u = Matrix::Zero(4, 4);
  for (Eigen::Index k = 0; k < 4; ++k) {
    const Eigen::Index control = k & 1;
    const Eigen::Index target = (k >> 1) & 1;
    const Eigen::Index out = control | ((target ^ control) << 1);
    u(out, k) = 1.0;
  }
  return chi_of_unitary(u);
}

ChiMatrix depolarizing_chi(std::size_t n_qubits) {
  const auto dim = static_cast<Eigen::Index>(pauli_basis_size(n_qubits));
  return ChiMatrix::from_matrix(n_qubits,
                                Matrix::Identity(dim, dim) / static_cast<double>(dim));
}

double process_fidelity(const ChiMatrix& chi, const ChiMatrix& ideal) {
  if (chi.n_qubits() != ideal.n_qubits()) {
    throw UsageError("process_fidelity: dimension mismatch");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(ideal.matrix(), Eigen::EigenvaluesOnly);
  double f = 0.0;
  if (solver.eigenvalues().maxCoeff() >= 1.0 - 1e-9) {
    f = (chi.matrix() * ideal.matrix()).trace().real();
  } else {
    const Matrix root = psd_sqrt(chi.matrix());
    const Matrix inner = root * ideal.matrix() * root;
    Eigen::SelfAdjointEigenSolver<Matrix> inner_solver(0.5 * (inner + inner.adjoint()),
                                                       Eigen::EigenvaluesOnly);
    const double tr = inner_solver.eigenvalues().cwiseMax(0.0).cwiseSqrt().sum();
    f = tr * tr;
  }
  return std::clamp(f, 0.0, 1.0);
}

Matrix project_to_unit_trace_psd(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (m + m.adjoint()));
  const Eigen::VectorXd lambda = solver.eigenvalues();
  const auto n = lambda.size();
  std::vector<double> sorted(lambda.data(), lambda.data() + n);
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double cumulative = 0.0;
  double shift = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) {
    cumulative += sorted[static_cast<std::size_t>(k)];
    const double candidate = (cumulative - 1.0) / static_cast<double>(k + 1);
    if (sorted[static_cast<std::size_t>(k)] - candidate > 0.0) {
      shift = candidate;
    }
  }
  const Eigen::VectorXd projected = (lambda.array() - shift).cwiseMax(0.0);
  return solver.eigenvectors() * projected.asDiagonal() * solver.eigenvectors().adjoint();
}

}  // namespace qce::tomography
