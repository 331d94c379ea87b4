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
#include <array>
#include <string>

#include "qce/error.hpp"
#include "qce/tomography/plan.hpp"

namespace qce::tomography {

using sim::PureState;

namespace {

constexpr std::array<MeasurementBasis, 3> kBases = {MeasurementBasis::X, MeasurementBasis::Y,
                                                    MeasurementBasis::Z};

std::vector<PureState> single_qubit_inputs() {
  return {PureState::zero(),  PureState::one(),    PureState::plus(),
          PureState::minus(), PureState::plus_y(), PureState::minus_y()};
}

const std::vector<std::string>& single_qubit_labels() {
  static const std::vector<std::string> labels = {"0", "1", "+", "-", "+y", "-y"};
  return labels;
}

}  // namespace

PureState basis_eigenstate(MeasurementBasis basis, bool outcome) {
  switch (basis) {
    case MeasurementBasis::X:
      return outcome ? PureState::minus() : PureState::plus();
    case MeasurementBasis::Y:
      return outcome ? PureState::minus_y() : PureState::plus_y();
    case MeasurementBasis::Z:
      return outcome ? PureState::one() : PureState::zero();
  }
  throw UsageError("unknown measurement basis");
}

TomographyPlan TomographyPlan::standard(std::size_t n_qubits, std::int64_t shots) {
  if (n_qubits != 1 && n_qubits != 2) {
    throw UsageError("tomography plans exist for 1 or 2 qubits");
  }
  if (shots < 0) {
    throw UsageError("shots must be non-negative");
  }
  TomographyPlan plan;
  plan.n_qubits = n_qubits;
  plan.shots = shots;
  const std::vector<PureState> singles = single_qubit_inputs();
  if (n_qubits == 1) {
    plan.inputs = singles;
    plan.input_labels = single_qubit_labels();
    for (MeasurementBasis b : kBases) {
      plan.settings.push_back({b});
    }
    return plan;
  }
  for (std::size_t i0 = 0; i0 < singles.size(); ++i0) {
    for (std::size_t i1 = 0; i1 < singles.size(); ++i1) {
      plan.inputs.push_back(sim::tensor(singles[i1], singles[i0]));
      plan.input_labels.push_back(single_qubit_labels()[i0] + "," + single_qubit_labels()[i1]);
    }
  }
  for (MeasurementBasis b0 : kBases) {
    for (MeasurementBasis b1 : kBases) {
      plan.settings.push_back({b0, b1});
    }
  }
  return plan;
}

bool TomographyPlan::is_standard() const {
  if (n_qubits != 1 && n_qubits != 2) {
    return false;
  }
  const TomographyPlan ref = standard(n_qubits, shots);
  if (inputs.size() != ref.inputs.size() || settings != ref.settings) {
    return false;
  }
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    if (inputs[k].n_qubits() != n_qubits ||
        sim::state_fidelity(inputs[k], ref.inputs[k]) < 1.0 - 1e-12) {
      return false;
    }
  }
  return true;
}

PureState TomographyPlan::outcome_state(std::size_t setting, std::size_t outcome) const {
  const auto& bases = settings.at(setting);
  if (bases.size() != n_qubits || outcome >= n_outcomes()) {
    throw UsageError("outcome_state: setting/outcome does not match the plan");
  }
  PureState state = basis_eigenstate(bases[0], (outcome & 1U) != 0);
  for (std::size_t q = 1; q < n_qubits; ++q) {
    state = sim::tensor(basis_eigenstate(bases[q], ((outcome >> q) & 1U) != 0), state);
  }
  return state;
}

double CountTable::total(std::size_t input, std::size_t setting) const {
  double sum = 0.0;
  for (std::size_t o = 0; o < n_outcomes; ++o) {
    sum += at(input, setting, o);
  }
  return sum;
}

CountTable collect(const QuantumChannel& channel, const TomographyPlan& plan, Rng& rng) {
  if (plan.shots < 0) {
    throw UsageError("collect: shots must be non-negative, got " + std::to_string(plan.shots));
  }
  if (channel.n_qubits != plan.n_qubits) {
    throw UsageError("collect: channel acts on " + std::to_string(channel.n_qubits) +
                     " qubits but the plan is for " + std::to_string(plan.n_qubits));
  }
  const bool exact = plan.shots == 0;
  CountTable table(plan.inputs.size(), plan.settings.size(), plan.n_outcomes(), exact);
  const Rng base(rng());

  for (std::size_t k = 0; k < plan.inputs.size(); ++k) {
    const sim::DensityMatrix out = channel(sim::density_of(plan.inputs[k]));
    for (std::size_t s = 0; s < plan.settings.size(); ++s) {
      std::vector<double> probs(plan.n_outcomes());
      for (std::size_t o = 0; o < probs.size(); ++o) {
        probs[o] = std::max(0.0, sim::fidelity(out, plan.outcome_state(s, o)));
      }
      if (exact) {
        for (std::size_t o = 0; o < probs.size(); ++o) {
          table.at(k, s, o) = probs[o];
        }
        continue;
      }
      std::vector<double> cumulative(probs.size());
      double acc = 0.0;
      for (std::size_t o = 0; o < probs.size(); ++o) {
        acc += probs[o];
        cumulative[o] = acc;
      }
      Rng stream = base.derive(k * plan.settings.size() + s);
      for (std::int64_t shot = 0; shot < plan.shots; ++shot) {
        const double u = stream.uniform() * acc;
        std::size_t o = 0;
        while (o + 1 < cumulative.size() && u >= cumulative[o]) {
          ++o;
        }
        table.at(k, s, o) += 1.0;
      }
    }
  }
  return table;
}

}  // namespace qce::tomography
