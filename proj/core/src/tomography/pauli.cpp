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

#include "qce/tomography/pauli.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include "qce/error.hpp"

namespace qce::tomography {

using sim::Complex;
using sim::Matrix;

Matrix pauli_matrix(Pauli p) {
  Matrix m = Matrix::Zero(2, 2);
  switch (p) {
    case Pauli::I:
      m(0, 0) = 1.0;
      m(1, 1) = 1.0;
      break;
    case Pauli::X:
      m(0, 1) = 1.0;
      m(1, 0) = 1.0;
      break;
    case Pauli::Y:
      m(0, 1) = Complex(0.0, -1.0);
      m(1, 0) = Complex(0.0, 1.0);
      break;
    case Pauli::Z:
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
      break;
  }
  return m;
}

Matrix pauli_basis_element(std::size_t n_qubits, std::size_t m) {
  if (m >= pauli_basis_size(n_qubits)) {
    throw UsageError("Pauli basis index out of range");
  }
  // Digit for qubit q sits at base-4 position (n - 1 - q).
  Matrix out = Matrix::Identity(1, 1);
  for (std::size_t q = 0; q < n_qubits; ++q) {
    const auto digit = static_cast<Pauli>((m >> (2 * (n_qubits - 1 - q))) & 3U);
    // Higher qubits are more significant: kron(new_high, accumulated_low).
    Matrix next = Eigen::kroneckerProduct(pauli_matrix(digit), out).eval();
    out = std::move(next);
  }
  return out;
}

std::string pauli_label(std::size_t n_qubits, std::size_t m) {
  static constexpr char kLetters[] = {'I', 'X', 'Y', 'Z'};
  std::string label;
  for (std::size_t q = 0; q < n_qubits; ++q) {
    label += kLetters[(m >> (2 * (n_qubits - 1 - q))) & 3U];
  }
  return label;
}

std::vector<Matrix> pauli_basis(std::size_t n_qubits) {
  std::vector<Matrix> basis;
  basis.reserve(pauli_basis_size(n_qubits));
  for (std::size_t m = 0; m < pauli_basis_size(n_qubits); ++m) {
    basis.push_back(pauli_basis_element(n_qubits, m));
  }
  return basis;
}

}  // namespace qce::tomography
