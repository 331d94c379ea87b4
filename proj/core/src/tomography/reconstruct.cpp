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

#include "qce/tomography/reconstruct.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <unsupported/Eigen/KroneckerProduct>

#include "qce/error.hpp"
#include "qce/tomography/pauli.hpp"

namespace qce::tomography {

using sim::Complex;
using sim::Matrix;
using sim::Vector;

namespace {

constexpr double kProbabilityFloor = 1e-300;
constexpr double kMinDilution = 1e-12;
constexpr double kMaxDilution = 1e6;

/// Parameter index of the real/imaginary part of chi_{mn}, m < n. Diagonal
/// entries occupy [0, D); off-diagonal pairs follow in row-major order.
std::size_t pair_offset(std::size_t m, std::size_t n, std::size_t dim) {
  // Number of pairs (m', n') with m' < m, plus the offset inside row m.
  const std::size_t before = m * dim - m * (m + 1) / 2;
  return dim + 2 * (before + (n - m - 1));
}

Matrix partial_trace_output(const Matrix& choi, Eigen::Index d) {
  Matrix out = Matrix::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      Complex acc = 0.0;
      for (Eigen::Index r = 0; r < d; ++r) {
        acc += choi(i * d + r, j * d + r);
      }
      out(i, j) = acc;
    }
  }
  return out;
}

/// Rescales J so that Tr_out J = I.
void normalize_trace_preserving(Matrix& choi, Eigen::Index d) {
  const Matrix lambda = partial_trace_output(choi, d);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (lambda + lambda.adjoint()));
  const Eigen::VectorXd inv_root =
      solver.eigenvalues().cwiseMax(1e-300).cwiseSqrt().cwiseInverse();
  const Matrix l_half = solver.eigenvectors() * inv_root.asDiagonal() *
                        solver.eigenvectors().adjoint();
  const Matrix left = Eigen::kroneckerProduct(l_half, Matrix::Identity(d, d)).eval();
  choi = left * choi * left;
  choi = 0.5 * (choi + choi.adjoint()).eval();
}

}  // namespace

ProcessReconstructor::ProcessReconstructor(const TomographyPlan& plan)
    : n_qubits_(plan.n_qubits),
      n_inputs_(plan.inputs.size()),
      n_settings_(plan.settings.size()),
      n_outcomes_(plan.n_outcomes()) {
  if (n_qubits_ != 1 && n_qubits_ != 2) {
    throw ReconstructionError("process tomography supports 1 or 2 qubits");
  }
  for (const auto& input : plan.inputs) {
    if (input.n_qubits() != n_qubits_) {
      throw ReconstructionError("plan input has the wrong number of qubits");
    }
  }
  const std::vector<Matrix> basis = pauli_basis(n_qubits_);
  const std::size_t dim = basis.size();  // D = d^2
  const auto d = static_cast<Eigen::Index>(std::size_t{1} << n_qubits_);
  const std::size_t n_rows = n_inputs_ * n_settings_ * n_outcomes_;
  if (n_rows == 0) {
    throw ReconstructionError("tomography plan is empty");
  }

  design_ = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n_rows),
                                  static_cast<Eigen::Index>(dim * dim));
  rows_ = Matrix::Zero(static_cast<Eigen::Index>(n_rows), d * d);
  Vector v(static_cast<Eigen::Index>(dim));
  for (std::size_t k = 0; k < n_inputs_; ++k) {
    const Vector& psi = plan.inputs[k].amplitudes();
    for (std::size_t s = 0; s < n_settings_; ++s) {
      for (std::size_t o = 0; o < n_outcomes_; ++o) {
        const auto row = static_cast<Eigen::Index>((k * n_settings_ + s) * n_outcomes_ + o);
        const Vector phi = plan.outcome_state(s, o).amplitudes();
        for (std::size_t m = 0; m < dim; ++m) {
          v(static_cast<Eigen::Index>(m)) = phi.dot(basis[m] * psi);
        }
        // p = sum_{mn} chi_{mn} v_m conj(v_n) over the Hermitian parameters.
        for (std::size_t m = 0; m < dim; ++m) {
          const Complex vm = v(static_cast<Eigen::Index>(m));
          design_(row, static_cast<Eigen::Index>(m)) = std::norm(vm);
          for (std::size_t n = m + 1; n < dim; ++n) {
            const Complex t = vm * std::conj(v(static_cast<Eigen::Index>(n)));
            const auto col = static_cast<Eigen::Index>(pair_offset(m, n, dim));
            design_(row, col) = 2.0 * t.real();
            design_(row, col + 1) = -2.0 * t.imag();
          }
        }
        for (Eigen::Index i = 0; i < d; ++i) {
          for (Eigen::Index r = 0; r < d; ++r) {
            // <w| with w = conj(psi) (x) phi.
            rows_(row, i * d + r) = psi(i) * std::conj(phi(r));
          }
        }
      }
    }
  }
  solver_.compute(design_);
  if (solver_.rank() < design_.cols()) {
    throw ReconstructionError("tomography design has rank " + std::to_string(solver_.rank()) +
                              " < " + std::to_string(design_.cols()) +
                              "; the plan does not determine chi");
  }

  vec_basis_ = Matrix::Zero(d * d, static_cast<Eigen::Index>(dim));
  for (std::size_t m = 0; m < dim; ++m) {
    for (Eigen::Index i = 0; i < d; ++i) {
      for (Eigen::Index r = 0; r < d; ++r) {
        vec_basis_(i * d + r, static_cast<Eigen::Index>(m)) = basis[m](r, i);
      }
    }
  }
  input_frame_ = static_cast<double>(n_inputs_) / static_cast<double>(d);
}

void ProcessReconstructor::check_table(const CountTable& counts) const {
  if (counts.n_inputs != n_inputs_ || counts.n_settings != n_settings_ ||
      counts.n_outcomes != n_outcomes_ ||
      counts.values.size() != n_inputs_ * n_settings_ * n_outcomes_) {
    throw ReconstructionError("count table does not cover the tomography plan");
  }
  for (double x : counts.values) {
    if (!(x >= 0.0) || !std::isfinite(x)) {
      throw ReconstructionError("count table has negative or non-finite entries");
    }
  }
}

ChiMatrix ProcessReconstructor::linear_inversion(const CountTable& counts) const {
  check_table(counts);
  Eigen::VectorXd freq(design_.rows());
  for (std::size_t k = 0; k < n_inputs_; ++k) {
    for (std::size_t s = 0; s < n_settings_; ++s) {
      const double total = counts.exact ? 1.0 : counts.total(k, s);
      if (total <= 0.0) {
        throw ReconstructionError("no counts for input " + std::to_string(k) + ", setting " +
                                  std::to_string(s));
      }
      for (std::size_t o = 0; o < n_outcomes_; ++o) {
        freq(static_cast<Eigen::Index>((k * n_settings_ + s) * n_outcomes_ + o)) =
            counts.at(k, s, o) / total;
      }
    }
  }
  const Eigen::VectorXd theta = solver_.solve(freq);
  const std::size_t dim = pauli_basis_size(n_qubits_);
  Matrix chi(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t m = 0; m < dim; ++m) {
    const auto mi = static_cast<Eigen::Index>(m);
    chi(mi, mi) = theta(mi);
    for (std::size_t n = m + 1; n < dim; ++n) {
      const auto ni = static_cast<Eigen::Index>(n);
      const auto col = static_cast<Eigen::Index>(pair_offset(m, n, dim));
      chi(mi, ni) = Complex(theta(col), theta(col + 1));
      chi(ni, mi) = std::conj(chi(mi, ni));
    }
  }
  return ChiMatrix::from_matrix(n_qubits_, project_to_unit_trace_psd(chi));
}

Matrix ProcessReconstructor::choi_of_chi(const ChiMatrix& chi) const {
  return vec_basis_ * chi.matrix() * vec_basis_.adjoint();
}

Matrix ProcessReconstructor::chi_of_choi(const Matrix& choi) const {
  const double d2 = static_cast<double>(vec_basis_.rows());
  Matrix chi = vec_basis_.adjoint() * choi * vec_basis_ / d2;
  chi = 0.5 * (chi + chi.adjoint()).eval();
  return chi / chi.trace().real();
}

ChiMatrix ProcessReconstructor::maximum_likelihood(const CountTable& counts,
                                                   const ChiMatrix& start,
                                                   const MleOptions& options,
                                                   ReconstructionInfo* info) const {
  check_table(counts);
  const auto d = static_cast<Eigen::Index>(std::size_t{1} << n_qubits_);
  const Eigen::Index dd = d * d;
  const Eigen::Map<const Eigen::VectorXd> f(counts.values.data(),
                                            static_cast<Eigen::Index>(counts.values.size()));
  const double n_total = f.sum();
  if (n_total <= 0.0) {
    throw ReconstructionError("maximum likelihood needs at least one count");
  }

  auto probabilities = [&](const Matrix& choi) {
    const Matrix y = rows_ * choi;
    return (y.cwiseProduct(rows_.conjugate())).rowwise().sum().real().eval();
  };
  auto log_likelihood = [&](const Eigen::VectorXd& p) {
    double ll = 0.0;
    for (Eigen::Index j = 0; j < p.size(); ++j) {
      if (f(j) > 0.0) {
        ll += f(j) * std::log(std::max(p(j), kProbabilityFloor));
      }
    }
    return ll / n_total;
  };

  const double mix = std::clamp(options.initial_mixing, 0.0, 1.0);
  Matrix choi = (1.0 - mix) * choi_of_chi(start) +
                mix * Matrix::Identity(dd, dd) / static_cast<double>(d);
  normalize_trace_preserving(choi, d);
  Eigen::VectorXd p = probabilities(choi);
  double ll = log_likelihood(p);

  // K = I at a perfect fit of a standard plan.
  const double scale = static_cast<double>(d) / n_total;
  const Matrix identity = Matrix::Identity(dd, dd);
  double dilution = 1.0;
  std::size_t iter = 0;
  bool converged = false;
  for (; iter < options.max_iterations; ++iter) {
    Eigen::VectorXd weights(p.size());
    for (Eigen::Index j = 0; j < p.size(); ++j) {
      weights(j) = f(j) > 0.0 ? scale * f(j) / std::max(p(j), kProbabilityFloor) : 0.0;
    }
    const Matrix k_op = rows_.adjoint() * weights.asDiagonal() * rows_;

    bool accepted = false;
    Matrix next;
    Eigen::VectorXd next_p;
    double next_ll = ll;
    while (dilution >= kMinDilution) {
      const Matrix k_eps = (identity + dilution * k_op) / (1.0 + dilution);
      next = k_eps * choi * k_eps;
      normalize_trace_preserving(next, d);
      next_p = probabilities(next);
      next_ll = log_likelihood(next_p);
      if (next_ll >= ll) {
        accepted = true;
        break;
      }
      dilution *= 0.25;
    }
    if (!accepted) {
      converged = true;
      break;
    }
    const double gain = next_ll - ll;
    choi = std::move(next);
    p = std::move(next_p);
    ll = next_ll;
    dilution = std::min(dilution * 2.0, kMaxDilution);
    if (gain < options.tolerance) {
      converged = true;
      ++iter;
      break;
    }
  }
  if (info != nullptr) {
    info->iterations = iter;
    info->log_likelihood = ll;
    info->converged = converged;
  }
  return ChiMatrix::from_matrix(n_qubits_, chi_of_choi(choi));
}

ChiMatrix ProcessReconstructor::reconstruct(const CountTable& counts, const MleOptions& options,
                                            ReconstructionInfo* info) const {
  ChiMatrix estimate = linear_inversion(counts);
  if (counts.exact) {
    if (info != nullptr) {
      *info = ReconstructionInfo{0, 0.0, true};
    }
    return estimate;
  }
  return maximum_likelihood(counts, estimate, options, info);
}

ChiMatrix reconstruct_chi(const CountTable& counts, const TomographyPlan& plan,
                          const MleOptions& options, ReconstructionInfo* info) {
  return ProcessReconstructor(plan).reconstruct(counts, options, info);
}

}  // namespace qce::tomography
