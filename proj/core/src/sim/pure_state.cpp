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

#include "qce/sim/pure_state.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qce/error.hpp"

namespace qce::sim {
namespace {

constexpr double kNormTolerance = 1e-12;
constexpr double kDegenerateBranch = 1e-12;

std::size_t checked_dimension(std::size_t n_qubits) {
  if (n_qubits > kMaxQubits) {
    throw UsageError("register of " + std::to_string(n_qubits) + " qubits exceeds the cap of " +
                     std::to_string(kMaxQubits));
  }
  return std::size_t{1} << n_qubits;
}

void check_qubit(std::size_t qubit, std::size_t n_qubits) {
  if (qubit >= n_qubits) {
    throw UsageError("qubit index " + std::to_string(qubit) + " out of range for " +
                     std::to_string(n_qubits) + "-qubit register");
  }
}

PureState equator(Complex phase) {
  Vector v(2);
  v << 1.0, phase;
  v /= std::numbers::sqrt2;
  return PureState::from_amplitudes(std::move(v));
}

}  // namespace

PureState::PureState(std::size_t n_qubits)
    : n_qubits_(n_qubits),
      amplitudes_(Vector::Zero(static_cast<Eigen::Index>(checked_dimension(n_qubits)))) {
  amplitudes_(0) = 1.0;
}

PureState::PureState(std::size_t n_qubits, Vector amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {}

PureState PureState::from_amplitudes(Vector amplitudes, bool renormalize) {
  const auto dim = static_cast<std::size_t>(amplitudes.size());
  if (dim == 0 || (dim & (dim - 1)) != 0) {
    throw UsageError("amplitude vector length " + std::to_string(dim) + " is not a power of two");
  }
  std::size_t n = 0;
  while ((std::size_t{1} << n) < dim) {
    ++n;
  }
  checked_dimension(n);
  const double norm = amplitudes.norm();
  if (renormalize) {
    if (norm <= 0.0) {
      throw UsageError("cannot normalize the zero vector");
    }
    amplitudes /= norm;
  } else if (std::abs(norm * norm - 1.0) > kNormTolerance) {
    throw UsageError("amplitudes are not normalized (|psi|^2 = " + std::to_string(norm * norm) +
                     ")");
  }
  return PureState(n, std::move(amplitudes));
}

PureState PureState::basis(std::size_t n_qubits, std::size_t index) {
  PureState state(n_qubits);
  if (index >= state.dimension()) {
    throw UsageError("basis index out of range");
  }
  state.amplitudes_(0) = 0.0;
  state.amplitudes_(static_cast<Eigen::Index>(index)) = 1.0;
  return state;
}

PureState PureState::plus() { return equator(1.0); }
PureState PureState::minus() { return equator(-1.0); }
PureState PureState::plus_y() { return equator(Complex(0.0, 1.0)); }
PureState PureState::minus_y() { return equator(Complex(0.0, -1.0)); }

void PureState::apply_single(std::size_t qubit, const Matrix& u) {
  check_qubit(qubit, n_qubits_);
  if (u.rows() != 2 || u.cols() != 2) {
    throw UsageError("apply_single expects a 2x2 matrix");
  }
  const std::size_t stride = std::size_t{1} << qubit;
  const Complex u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);
  const std::size_t dim = dimension();
  for (std::size_t base = 0; base < dim; base += 2 * stride) {
    for (std::size_t k = base; k < base + stride; ++k) {
      const auto lo = static_cast<Eigen::Index>(k);
      const auto hi = static_cast<Eigen::Index>(k + stride);
      const Complex a0 = amplitudes_(lo);
      const Complex a1 = amplitudes_(hi);
      amplitudes_(lo) = u00 * a0 + u01 * a1;
      amplitudes_(hi) = u10 * a0 + u11 * a1;
    }
  }
}

void PureState::apply_cnot(std::size_t control, std::size_t target) {
  GateOp::cnot(control, target).validate(n_qubits_);
  const std::size_t cmask = std::size_t{1} << control;
  const std::size_t tmask = std::size_t{1} << target;
  const std::size_t dim = dimension();
  for (std::size_t k = 0; k < dim; ++k) {
    if ((k & cmask) != 0 && (k & tmask) == 0) {
      std::swap(amplitudes_(static_cast<Eigen::Index>(k)),
                amplitudes_(static_cast<Eigen::Index>(k | tmask)));
    }
  }
}

void PureState::apply(const GateOp& op) {
  op.validate(n_qubits_);
  if (op.kind == GateKind::CNOT) {
    apply_cnot(op.targets[0], op.targets[1]);
  } else {
    apply_single(op.targets[0], gate_matrix(op.kind));
  }
}

PureState apply_gate(PureState state, const GateOp& op) {
  state.apply(op);
  return state;
}

PureState apply_circuit(PureState state, const Circuit& circuit) {
  if (circuit.n_qubits != state.n_qubits()) {
    throw UsageError("circuit has " + std::to_string(circuit.n_qubits) +
                     " qubits but the state has " + std::to_string(state.n_qubits()));
  }
  for (const GateOp& op : circuit.ops) {
    state.apply(op);
  }
  return state;
}

PureState tensor(const PureState& high, const PureState& low) {
  const std::size_t n = high.n_qubits() + low.n_qubits();
  checked_dimension(n);
  Vector out(static_cast<Eigen::Index>(high.dimension() * low.dimension()));
  const auto low_dim = static_cast<Eigen::Index>(low.dimension());
  for (Eigen::Index h = 0; h < static_cast<Eigen::Index>(high.dimension()); ++h) {
    out.segment(h * low_dim, low_dim) = high.amplitudes()(h) * low.amplitudes();
  }
  return PureState::from_amplitudes(std::move(out), true);
}

PureState permute_qubits(const PureState& state, std::span<const std::size_t> order) {
  const std::size_t n = state.n_qubits();
  if (order.size() != n) {
    throw UsageError("permutation length does not match the register");
  }
  std::vector<bool> seen(n, false);
  for (std::size_t q : order) {
    if (q >= n || seen[q]) {
      throw UsageError("qubit order is not a permutation");
    }
    seen[q] = true;
  }
  Vector out(static_cast<Eigen::Index>(state.dimension()));
  for (std::size_t old_index = 0; old_index < state.dimension(); ++old_index) {
    std::size_t new_index = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if ((old_index >> order[k]) & 1U) {
        new_index |= std::size_t{1} << k;
      }
    }
    out(static_cast<Eigen::Index>(new_index)) = state.amplitude(old_index);
  }
  return PureState::from_amplitudes(std::move(out), true);
}

PureState remove_qubit(const PureState& state, std::size_t qubit, bool value) {
  check_qubit(qubit, state.n_qubits());
  const std::size_t mask = std::size_t{1} << qubit;
  const std::size_t low_mask = mask - 1;
  Vector out(static_cast<Eigen::Index>(state.dimension() / 2));
  double residual = 0.0;
  for (std::size_t k = 0; k < state.dimension(); ++k) {
    const bool bit = (k & mask) != 0;
    if (bit != value) {
      residual += std::norm(state.amplitude(k));
      continue;
    }
    const std::size_t reduced = (k & low_mask) | ((k >> 1) & ~low_mask);
    out(static_cast<Eigen::Index>(reduced)) = state.amplitude(k);
  }
  if (residual > kNormTolerance) {
    throw UsageError("qubit " + std::to_string(qubit) + " is not in a definite basis state");
  }
  return PureState::from_amplitudes(std::move(out), true);
}

double probability_one(const PureState& state, std::size_t qubit) {
  check_qubit(qubit, state.n_qubits());
  const std::size_t mask = std::size_t{1} << qubit;
  double p1 = 0.0;
  for (std::size_t k = 0; k < state.dimension(); ++k) {
    if ((k & mask) != 0) {
      p1 += std::norm(state.amplitude(k));
    }
  }
  return p1;
}

Measurement measure_z(const PureState& state, std::size_t qubit, BranchSource branch) {
  const double p1 = probability_one(state, qubit);
  const double p0 = 1.0 - p1;
  bool outcome = false;
  if (branch.is_forced()) {
    outcome = branch.forced_outcome();
    const double p = outcome ? p1 : p0;
    if (p <= kDegenerateBranch) {
      throw DegenerateBranchError("forced outcome " + std::to_string(int{outcome}) + " on qubit " +
                                  std::to_string(qubit) + " has probability " + std::to_string(p));
    }
  } else {
    outcome = branch.rng().uniform() < p1;
  }
  const double probability = outcome ? p1 : p0;
  const std::size_t mask = std::size_t{1} << qubit;
  Vector post = state.amplitudes();
  for (std::size_t k = 0; k < state.dimension(); ++k) {
    if (((k & mask) != 0) != outcome) {
      post(static_cast<Eigen::Index>(k)) = 0.0;
    }
  }
  post /= std::sqrt(probability);
  return Measurement{outcome, PureState::from_amplitudes(std::move(post), true), probability};
}

double state_fidelity(const PureState& a, const PureState& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw UsageError("state_fidelity: dimension mismatch");
  }
  return std::norm(a.amplitudes().dot(b.amplitudes()));
}

PureState random_state(std::size_t n_qubits, Rng& rng) {
  Vector v(static_cast<Eigen::Index>(checked_dimension(n_qubits)));
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    const double re = rng.normal();
    const double im = rng.normal();
    v(k) = Complex(re, im);
  }
  return PureState::from_amplitudes(std::move(v), true);
}

}  // namespace qce::sim
