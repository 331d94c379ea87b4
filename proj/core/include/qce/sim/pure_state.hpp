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
#include <variant>
#include <vector>

#include "qce/random.hpp"
#include "qce/sim/gates.hpp"

namespace qce::sim {

/// Normalized state vector of a small register.
///
/// Qubit 0 is the least significant bit of the amplitude index, so the
/// amplitude of |q_{n-1} ... q_1 q_0> lives at index sum_k q_k 2^k.
class PureState {
 public:
  /// |0...0> on n qubits.
  explicit PureState(std::size_t n_qubits);

  /// Takes ownership of amplitudes; length must be 2^n (n <= kMaxQubits) and
  /// the norm must be 1 within 1e-12 unless `renormalize` is set.
  static PureState from_amplitudes(Vector amplitudes, bool renormalize = false);
  static PureState basis(std::size_t n_qubits, std::size_t index);

  // Single-qubit reference states.
  static PureState zero() { return basis(1, 0); }
  static PureState one() { return basis(1, 1); }
  static PureState plus();
  static PureState minus();
  static PureState plus_y();
  static PureState minus_y();

  std::size_t n_qubits() const { return n_qubits_; }
  std::size_t dimension() const { return static_cast<std::size_t>(amplitudes_.size()); }
  const Vector& amplitudes() const { return amplitudes_; }
  Complex amplitude(std::size_t index) const { return amplitudes_(static_cast<Eigen::Index>(index)); }
  double norm() const { return amplitudes_.norm(); }

  /// In-place 2x2 unitary on one qubit.
  void apply_single(std::size_t qubit, const Matrix& u);
  void apply_cnot(std::size_t control, std::size_t target);
  void apply(const GateOp& op);

 private:
  PureState(std::size_t n_qubits, Vector amplitudes);

  std::size_t n_qubits_;
  Vector amplitudes_;
};

/// Returns state with op's unitary applied; throws UsageError on bad targets.
PureState apply_gate(PureState state, const GateOp& op);
PureState apply_circuit(PureState state, const Circuit& circuit);

/// Product state with `high` occupying the most significant qubits:
/// result qubits [0, low.n) come from `low`, [low.n, low.n + high.n) from `high`.
PureState tensor(const PureState& high, const PureState& low);

/// new qubit k = old qubit order[k]. `order` must be a permutation.
PureState permute_qubits(const PureState& state, std::span<const std::size_t> order);

/// Drops a qubit that is in the definite computational state `value`.
/// Throws UsageError if the qubit still carries weight on the other value.
PureState remove_qubit(const PureState& state, std::size_t qubit, bool value);

/// Where a measurement outcome comes from: sampled from an Rng, or forced.
class BranchSource {
 public:
  static BranchSource sample(Rng& rng) { return BranchSource(&rng); }
  static BranchSource forced(bool outcome) { return BranchSource(outcome); }

  bool is_forced() const { return std::holds_alternative<bool>(source_); }
  bool forced_outcome() const { return std::get<bool>(source_); }
  Rng& rng() const { return *std::get<Rng*>(source_); }

 private:
  explicit BranchSource(Rng* rng) : source_(rng) {}
  explicit BranchSource(bool outcome) : source_(outcome) {}
  std::variant<Rng*, bool> source_;
};

struct Measurement {
  bool outcome;
  PureState post_state;
  double probability;
};

/// Probability that `qubit` reads 1.
double probability_one(const PureState& state, std::size_t qubit);

/// Computational-basis measurement of one qubit. The post-measurement state
/// keeps the register size, with the measured qubit collapsed.
/// Forcing a branch of probability <= 1e-12 throws DegenerateBranchError.
Measurement measure_z(const PureState& state, std::size_t qubit, BranchSource branch);

/// |<a|b>|^2; global-phase insensitive.
double state_fidelity(const PureState& a, const PureState& b);

/// Haar-random state built from normalized complex Gaussians.
PureState random_state(std::size_t n_qubits, Rng& rng);

}  // namespace qce::sim
