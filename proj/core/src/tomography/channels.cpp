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

#include "qce/tomography/channels.hpp"

#include <string>

#include "qce/error.hpp"
#include "qce/protocol/session.hpp"
#include "qce/tomography/chi.hpp"

namespace qce::tomography {

using sim::DensityMatrix;
using sim::Matrix;
using sim::PureState;

namespace {

struct Run {
  qotp::AuxSecret aux;  // meaningful only for R
  bool c = false;       // meaningful only for R
  double weight = 0.0;
  const PureState* encrypted = nullptr;
  const PureState* decrypted = nullptr;
};

void check_input(sim::GateKind gate, const DensityMatrix& rho) {
  const std::size_t n = sim::arity(gate);
  if (rho.n_qubits() != n) {
    throw UsageError("channel for " + std::string(sim::to_string(gate)) + " acts on " +
                     std::to_string(n) + " qubit(s), got a " + std::to_string(rho.n_qubits()) +
                     "-qubit input");
  }
}

/// Runs the protocol for every key, auxiliary secret and branch on every
/// eigencomponent of the input, handing each run to `visit`.
template <typename Visitor>
void enumerate_runs(sim::GateKind gate, const DensityMatrix& input, Visitor&& visit) {
  check_input(gate, input);
  const sim::Circuit circuit = canonical_circuit(gate);
  const std::size_t n = circuit.n_qubits;
  const std::size_t n_r = circuit.r_count();
  const std::size_t key_combos = std::size_t{1} << (2 * n);
  const std::size_t aux_combos = std::size_t{1} << (2 * n_r);
  const std::size_t branch_combos = std::size_t{1} << n_r;
  const double secret_weight = 1.0 / static_cast<double>(key_combos * aux_combos);

  for (const auto& [lambda, psi] : input.spectral_decomposition()) {
    for (std::size_t kcode = 0; kcode < key_combos; ++kcode) {
      for (std::size_t acode = 0; acode < aux_combos; ++acode) {
        protocol::ClientSecrets secrets;
        secrets.keys = qotp::KeyRegister(n);
        for (std::size_t q = 0; q < n; ++q) {
          secrets.keys[q] = qotp::kAllKeys[(kcode >> (2 * q)) & 3U];
        }
        for (std::size_t r = 0; r < n_r; ++r) {
          secrets.aux.push_back(qotp::kAllAuxSecrets[(acode >> (2 * r)) & 3U]);
        }
        for (std::size_t bcode = 0; bcode < branch_combos; ++bcode) {
          std::optional<protocol::PathResult> path;
          try {
            path = protocol::execute_path(circuit, psi, secrets, [bcode](std::size_t r) {
              return sim::BranchSource::forced(((bcode >> r) & 1U) != 0);
            });
          } catch (const DegenerateBranchError&) {
            continue;
          }
          Run run;
          if (n_r > 0) {
            run.aux = secrets.aux.front();
            run.c = path->c_bits.front();
          }
          run.weight = lambda * secret_weight * path->probability;
          run.encrypted = &path->encrypted_output;
          run.decrypted = &path->decrypted_output;
          visit(run);
        }
      }
    }
  }
}

Matrix outer(const PureState& s) { return s.amplitudes() * s.amplitudes().adjoint(); }

DensityMatrix normalized(const Matrix& acc, double total) {
  if (total <= 0.0) {
    throw UsageError("channel output has zero weight");
  }
  return DensityMatrix::from_matrix(acc / total);
}

QuantumChannel protocol_channel(sim::GateKind gate, bool decrypt) {
  return QuantumChannel{sim::arity(gate), [gate, decrypt](const DensityMatrix& rho) {
                          const auto dim = static_cast<Eigen::Index>(rho.dimension());
                          Matrix acc = Matrix::Zero(dim, dim);
                          double total = 0.0;
                          enumerate_runs(gate, rho, [&](const Run& run) {
                            acc += run.weight * outer(decrypt ? *run.decrypted : *run.encrypted);
                            total += run.weight;
                          });
                          return normalized(acc, total);
                        }};
}

}  // namespace

QuantumChannel identity_channel(std::size_t n_qubits) {
  return QuantumChannel{n_qubits, [](const DensityMatrix& rho) { return rho; }};
}

QuantumChannel unitary_channel(const Matrix& unitary) {
  std::size_t n = 0;
  while ((Eigen::Index{1} << n) < unitary.rows()) {
    ++n;
  }
  return QuantumChannel{n, [unitary](const DensityMatrix& rho) {
                          return DensityMatrix::from_matrix(unitary * rho.matrix() *
                                                            unitary.adjoint());
                        }};
}

QuantumChannel depolarizing_channel(std::size_t n_qubits) {
  return QuantumChannel{n_qubits, [n_qubits](const DensityMatrix&) {
                          return DensityMatrix::maximally_mixed(n_qubits);
                        }};
}

QuantumChannel chi_channel(const ChiMatrix& chi) {
  return QuantumChannel{chi.n_qubits(), [chi](const DensityMatrix& rho) {
                          return DensityMatrix::from_matrix(chi.apply(rho.matrix()));
                        }};
}

sim::Circuit canonical_circuit(sim::GateKind gate) {
  if (gate == sim::GateKind::CNOT) {
    return sim::Circuit{2, {sim::GateOp::cnot(0, 1)}};
  }
  return sim::Circuit{1, {sim::GateOp::single(gate, 0)}};
}

QuantumChannel channel_of_gate_decrypted(sim::GateKind gate) {
  if (gate != sim::GateKind::R) {
    return protocol_channel(gate, true);
  }
  // R: the client reassembles the output from its eight (y, d, c) bins.
  return QuantumChannel{1, [](const DensityMatrix& rho) {
                          Matrix acc = Matrix::Zero(2, 2);
                          double total = 0.0;
                          for (const RGadgetBin& bin : r_gadget_decrypted_bins(rho)) {
                            acc += bin.weight * bin.output.matrix();
                            total += bin.weight;
                          }
                          return normalized(acc, total);
                        }};
}

QuantumChannel channel_of_gate_server_view(sim::GateKind gate) {
  if (gate != sim::GateKind::R) {
    return protocol_channel(gate, false);
  }
  return QuantumChannel{1, [](const DensityMatrix& rho) {
                          Matrix acc = Matrix::Zero(2, 2);
                          double total = 0.0;
                          for (const auto& [weight, state] : r_gadget_server_bins(rho)) {
                            acc += weight * state.matrix();
                            total += weight;
                          }
                          return normalized(acc, total);
                        }};
}

std::vector<RGadgetBin> r_gadget_decrypted_bins(const DensityMatrix& input) {
  std::array<Matrix, 8> acc;
  std::array<double, 8> weight{};
  acc.fill(Matrix::Zero(2, 2));
  enumerate_runs(sim::GateKind::R, input, [&](const Run& run) {
    const std::size_t bin = (std::size_t{run.aux.y} << 2) | (std::size_t{run.aux.d} << 1) |
                            std::size_t{run.c};
    acc[bin] += run.weight * outer(*run.decrypted);
    weight[bin] += run.weight;
  });
  std::vector<RGadgetBin> bins;
  bins.reserve(8);
  for (std::size_t bin = 0; bin < 8; ++bin) {
    if (weight[bin] <= 0.0) {
      continue;
    }
    bins.push_back(RGadgetBin{qotp::AuxSecret{((bin >> 2) & 1U) != 0, ((bin >> 1) & 1U) != 0},
                              (bin & 1U) != 0, weight[bin] / input.matrix().trace().real(),
                              normalized(acc[bin], weight[bin])});
  }
  return bins;
}

std::array<std::pair<double, DensityMatrix>, 2> r_gadget_server_bins(const DensityMatrix& input) {
  std::array<Matrix, 2> acc = {Matrix::Zero(2, 2), Matrix::Zero(2, 2)};
  std::array<double, 2> weight{};
  enumerate_runs(sim::GateKind::R, input, [&](const Run& run) {
    acc[run.c ? 1 : 0] += run.weight * outer(*run.encrypted);
    weight[run.c ? 1 : 0] += run.weight;
  });
  return {std::pair{weight[0], normalized(acc[0], weight[0])},
          std::pair{weight[1], normalized(acc[1], weight[1])}};
}

}  // namespace qce::tomography
