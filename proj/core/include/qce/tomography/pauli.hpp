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
#include <string>
#include <vector>

#include "qce/sim/gates.hpp"

namespace qce::tomography {

enum class Pauli { I, X, Y, Z };

sim::Matrix pauli_matrix(Pauli p);

/// Number of operators in the n-qubit Pauli basis (4^n).
constexpr std::size_t pauli_basis_size(std::size_t n_qubits) { return std::size_t{1} << (2 * n_qubits); }

/// Element m of the n-qubit Pauli operator basis, ordered lexicographically
/// over (I, X, Y, Z) with qubit 0 as the leading letter: for two qubits
/// m = 4 * i_0 + i_1 and the label "XZ" means X on qubit 0, Z on qubit 1.
/// The returned matrix uses the little-endian register convention.
sim::Matrix pauli_basis_element(std::size_t n_qubits, std::size_t m);
std::string pauli_label(std::size_t n_qubits, std::size_t m);
std::vector<sim::Matrix> pauli_basis(std::size_t n_qubits);

}  // namespace qce::tomography
