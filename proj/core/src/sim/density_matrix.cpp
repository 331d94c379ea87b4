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

#include "qce/sim/density_matrix.hpp"

#include <cmath>
#include <string>

#include "qce/error.hpp"

namespace qce::sim {
namespace {

constexpr double kHermitianTolerance = 1e-12;
constexpr double kTraceTolerance = 1e-12;
constexpr double kEigenFloor = -1e-10;
constexpr double kWeightTolerance = 1e-12;

std::size_t qubits_for_dimension(Eigen::Index dim) {
  std::size_t n = 0;
  while ((Eigen::Index{1} << n) < dim) {
    ++n;
  }
  if ((Eigen::Index{1} << n) != dim || n > kMaxQubits) {
    throw UsageError("density matrix dimension " + std::to_string(dim) +
                     " is not a supported power of two");
  }
  return n;
}

template <typename Member, typename ToMatrix>
DensityMatrix mix_impl(std::span<const std::pair<double, Member>> members, ToMatrix to_matrix) {
  if (members.empty()) {
    throw UsageError("mix: no members");
  }
  double total = 0.0;
  Matrix acc;
  for (const auto& [weight, member] : members) {
    if (!(weight >= 0.0)) {
      throw UsageError("mix: negative weight");
    }
    Matrix m = to_matrix(member);
    if (acc.size() == 0) {
      acc = Matrix::Zero(m.rows(), m.cols());
    } else if (acc.rows() != m.rows()) {
      throw UsageError("mix: members have different dimensions");
    }
    acc += weight * m;
    total += weight;
  }
  if (std::abs(total - 1.0) > kWeightTolerance) {
    throw UsageError("mix: weights sum to " + std::to_string(total) + ", expected 1");
  }
  return DensityMatrix::from_matrix(std::move(acc));
}

}  // namespace

DensityMatrix::DensityMatrix(std::size_t n_qubits, Matrix matrix)
    : n_qubits_(n_qubits), matrix_(std::move(matrix)) {}

DensityMatrix DensityMatrix::from_matrix(Matrix matrix) {
  if (matrix.rows() != matrix.cols()) {
    throw UsageError("density matrix must be square");
  }
  const std::size_t n = qubits_for_dimension(matrix.rows());
  const double herm_dev = (matrix - matrix.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev > kHermitianTolerance) {
    throw UsageError("density matrix is not Hermitian (max deviation " + std::to_string(herm_dev) +
                     ")");
  }
  const Complex tr = matrix.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > kTraceTolerance) {
    throw UsageError("density matrix trace is " + std::to_string(tr.real()) + ", expected 1");
  }
  // Symmetrize away the sub-tolerance anti-Hermitian residue.
  Matrix herm = 0.5 * (matrix + matrix.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(herm, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < kEigenFloor) {
    throw UsageError("density matrix has eigenvalue " +
                     std::to_string(solver.eigenvalues().minCoeff()));
  }
  return DensityMatrix(n, std::move(herm));
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t n_qubits) {
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n_qubits);
  return from_matrix(Matrix::Identity(dim, dim) / static_cast<double>(dim));
}

std::vector<std::pair<double, PureState>> DensityMatrix::spectral_decomposition(
    double cutoff) const {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(matrix_);
  std::vector<std::pair<double, PureState>> out;
  for (Eigen::Index k = solver.eigenvalues().size() - 1; k >= 0; --k) {
    const double w = solver.eigenvalues()(k);
    if (w > cutoff) {
      out.emplace_back(w, PureState::from_amplitudes(solver.eigenvectors().col(k), true));
    }
  }
  return out;
}

DensityMatrix density_of(const PureState& state) {
  const Vector& v = state.amplitudes();
  return DensityMatrix::from_matrix(v * v.adjoint());
}

DensityMatrix mix(std::span<const std::pair<double, DensityMatrix>> members) {
  return mix_impl(members, [](const DensityMatrix& d) { return d.matrix(); });
}

DensityMatrix mix(std::span<const std::pair<double, PureState>> members) {
  return mix_impl(members, [](const PureState& s) -> Matrix {
    return s.amplitudes() * s.amplitudes().adjoint();
  });
}

DensityMatrix partial_trace_keep(const DensityMatrix& rho, std::span<const std::size_t> keep) {
  const std::size_t n = rho.n_qubits();
  std::vector<bool> kept(n, false);
  for (std::size_t q : keep) {
    if (q >= n || kept[q]) {
      throw UsageError("partial_trace_keep: invalid or repeated qubit");
    }
    kept[q] = true;
  }
  std::vector<std::size_t> traced;
  for (std::size_t q = 0; q < n; ++q) {
    if (!kept[q]) {
      traced.push_back(q);
    }
  }
  const std::size_t kdim = std::size_t{1} << keep.size();
  const std::size_t tdim = std::size_t{1} << traced.size();
  auto compose = [&](std::size_t kidx, std::size_t tidx) {
    std::size_t full = 0;
    for (std::size_t j = 0; j < keep.size(); ++j) {
      if ((kidx >> j) & 1U) full |= std::size_t{1} << keep[j];
    }
    for (std::size_t j = 0; j < traced.size(); ++j) {
      if ((tidx >> j) & 1U) full |= std::size_t{1} << traced[j];
    }
    return static_cast<Eigen::Index>(full);
  };
  Matrix out = Matrix::Zero(static_cast<Eigen::Index>(kdim), static_cast<Eigen::Index>(kdim));
  for (std::size_t r = 0; r < kdim; ++r) {
    for (std::size_t c = 0; c < kdim; ++c) {
      Complex acc = 0.0;
      for (std::size_t t = 0; t < tdim; ++t) {
        acc += rho.matrix()(compose(r, t), compose(c, t));
      }
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = acc;
    }
  }
  return DensityMatrix::from_matrix(std::move(out));
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dimension() != sigma.dimension()) {
    throw UsageError("trace_distance: dimension mismatch");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(rho.matrix() - sigma.matrix(),
                                               Eigen::EigenvaluesOnly);
  return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

double fidelity(const DensityMatrix& rho, const PureState& psi) {
  if (rho.dimension() != psi.dimension()) {
    throw UsageError("fidelity: dimension mismatch");
  }
  return psi.amplitudes().dot(rho.matrix() * psi.amplitudes()).real();
}

std::vector<double> basis_probabilities(const DensityMatrix& rho) {
  std::vector<double> p(rho.dimension());
  for (std::size_t k = 0; k < p.size(); ++k) {
    p[k] = rho.matrix()(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)).real();
  }
  return p;
}

}  // namespace qce::sim
