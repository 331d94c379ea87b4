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

#include "qce/tomography/chi.hpp"
#include "qce/tomography/plan.hpp"

namespace qce::tomography {

struct MleOptions {
  /// Stop when the per-count log-likelihood improves by less than this.
  double tolerance = 1e-10;
  std::size_t max_iterations = 5000;
  /// Weight of the maximally mixed process blended into the starting point
  /// so every probability is strictly positive.
  double initial_mixing = 1e-4;
};

struct ReconstructionInfo {
  std::size_t iterations = 0;
  double log_likelihood = 0.0;  // per count
  bool converged = false;
};

/// Reusable reconstruction for one plan. Builds the linear-inversion design
/// (with rank check) and the Choi-form measurement operators once.
///
/// Exact tables: least-squares linear inversion over the Hermitian
/// parametrization of chi, then projection onto unit-trace PSD matrices.
/// Sampled tables: the same estimate seeds a diluted fixed-point likelihood
/// ascent on the Choi matrix J (J <- L K J K L, with L restoring
/// Tr_out J = I every step), so the result is CP and trace preserving.
class ProcessReconstructor {
 public:
  /// Throws ReconstructionError if the plan does not determine chi.
  explicit ProcessReconstructor(const TomographyPlan& plan);

  ChiMatrix reconstruct(const CountTable& counts, const MleOptions& options = {},
                        ReconstructionInfo* info = nullptr) const;

  /// Linear inversion followed by the unit-trace PSD projection.
  ChiMatrix linear_inversion(const CountTable& counts) const;

  ChiMatrix maximum_likelihood(const CountTable& counts, const ChiMatrix& start,
                               const MleOptions& options = {},
                               ReconstructionInfo* info = nullptr) const;

  /// Choi matrix (input (x) output) <-> chi.
  sim::Matrix choi_of_chi(const ChiMatrix& chi) const;
  sim::Matrix chi_of_choi(const sim::Matrix& choi) const;

  std::size_t n_qubits() const { return n_qubits_; }

 private:
  void check_table(const CountTable& counts) const;

  std::size_t n_qubits_;
  std::size_t n_inputs_;
  std::size_t n_settings_;
  std::size_t n_outcomes_;
  Eigen::MatrixXd design_;  // rows: (input, setting, outcome); cols: Hermitian chi params
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> solver_;
  sim::Matrix rows_;    // row j = <w_j|, with w_j = conj(psi_k) (x) phi_{s,o}
  sim::Matrix vec_basis_;  // column m = vec(P_m)
  double input_frame_;  // sum_k rho_k = input_frame_ * I
};

/// Convenience wrapper building a ProcessReconstructor.
ChiMatrix reconstruct_chi(const CountTable& counts, const TomographyPlan& plan,
                          const MleOptions& options = {}, ReconstructionInfo* info = nullptr);

}  // namespace qce::tomography
