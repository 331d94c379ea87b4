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
#include <cstdint>
#include <string>
#include <vector>

#include "qce/random.hpp"
#include "qce/sim/pure_state.hpp"
#include "qce/tomography/channels.hpp"

namespace qce::tomography {

enum class MeasurementBasis { X, Y, Z };

/// Eigenvector of a single-qubit Pauli measurement: outcome 0 is the +1
/// eigenstate (|+>, |+_y>, |0>), outcome 1 the -1 eigenstate.
sim::PureState basis_eigenstate(MeasurementBasis basis, bool outcome);

/// Input states, measurement settings and shot budget of a tomography run.
///
/// Standard single-qubit plan: inputs |0>, |1>, |+>, |->, |+_y>, |-_y>;
/// settings X, Y, Z. Standard two-qubit plan: the 36 products
/// (index 6 * i_0 + i_1, qubit 0 leading) and the 9 local setting pairs
/// (index 3 * b_0 + b_1). Outcome index o = o_0 + 2 * o_1.
struct TomographyPlan {
  std::size_t n_qubits = 1;
  std::vector<sim::PureState> inputs;
  std::vector<std::string> input_labels;
  std::vector<std::vector<MeasurementBasis>> settings;  // one basis per qubit
  std::int64_t shots = 0;  // 0 = exact probabilities

  static TomographyPlan standard(std::size_t n_qubits, std::int64_t shots = 0);

  bool is_standard() const;
  std::size_t n_outcomes() const { return std::size_t{1} << n_qubits; }

  /// Product eigenvector |phi> whose projector is (setting, outcome).
  sim::PureState outcome_state(std::size_t setting, std::size_t outcome) const;
};

/// Per (input, setting, outcome) values: Born probabilities in exact mode,
/// integer counts in sampled mode.
struct CountTable {
  std::size_t n_inputs = 0;
  std::size_t n_settings = 0;
  std::size_t n_outcomes = 0;
  bool exact = true;
  std::vector<double> values;

  CountTable() = default;
  CountTable(std::size_t inputs, std::size_t settings, std::size_t outcomes, bool is_exact)
      : n_inputs(inputs),
        n_settings(settings),
        n_outcomes(outcomes),
        exact(is_exact),
        values(inputs * settings * outcomes, 0.0) {}

  double& at(std::size_t input, std::size_t setting, std::size_t outcome) {
    return values[(input * n_settings + setting) * n_outcomes + outcome];
  }
  double at(std::size_t input, std::size_t setting, std::size_t outcome) const {
    return values[(input * n_settings + setting) * n_outcomes + outcome];
  }
  double total(std::size_t input, std::size_t setting) const;
};

/// Exact mode (plan.shots == 0) fills Born probabilities. Sampled mode draws
/// plan.shots categorical samples per (input, setting), each pair from its
/// own stream derived from one draw of `rng` and the pair index.
/// Throws UsageError for shots < 0 or a channel/plan size mismatch.
CountTable collect(const QuantumChannel& channel, const TomographyPlan& plan, Rng& rng);

}  // namespace qce::tomography
