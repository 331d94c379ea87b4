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

#include "qce/verify/identities.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>

#include "qce/error.hpp"
#include "qce/protocol/server_ops.hpp"
#include "qce/qotp/pad.hpp"
#include "qce/random.hpp"
#include "qce/sim/density_matrix.hpp"
#include "qce/sim/pure_state.hpp"

namespace qce::verify {

using qotp::AuxSecret;
using qotp::EncKey;
using sim::GateKind;
using sim::GateOp;
using sim::PureState;

namespace {

constexpr double kTolerance = 1e-12;

std::string key_label(EncKey k) {
  return std::string("a=") + (k.a ? "1" : "0") + " b=" + (k.b ? "1" : "0");
}

std::string format(const char* fmt, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), fmt, v);
  return buf;
}

void finish(IdentityRow& row) {
  row.passed = row.detail.empty() && row.worst_fidelity >= 1.0 - kTolerance;
  if (!row.passed && row.detail.empty()) {
    row.detail = "worst fidelity " + format("%.15f", row.worst_fidelity);
  }
}

IdentityRow single_qubit_row(GateKind gate, EncKey key, const VerifyOptions& opt, Rng& rng) {
  IdentityRow row;
  row.group = sim::to_string(gate);
  row.case_label = key_label(key);
  const GateOp op = GateOp::single(gate, 0);
  try {
    const EncKey updated = opt.rules.clifford(gate, key);
    for (std::size_t i = 0; i < opt.samples; ++i) {
      const PureState psi = sim::random_state(1, rng);
      const PureState out = sim::apply_gate(qotp::encrypt(psi, 0, key), op);
      const double f = sim::state_fidelity(qotp::decrypt(out, 0, updated), sim::apply_gate(psi, op));
      row.worst_fidelity = std::min(row.worst_fidelity, f);
    }
  } catch (const std::exception& e) {
    row.detail = e.what();
  }
  finish(row);
  return row;
}

IdentityRow cnot_row(EncKey control, EncKey target, const VerifyOptions& opt, Rng& rng) {
  IdentityRow row;
  row.group = "CNOT";
  row.case_label = "control " + key_label(control) + ", target " + key_label(target);
  const GateOp op = GateOp::cnot(0, 1);
  try {
    const auto [kc, kt] = opt.rules.cnot(control, target);
    for (std::size_t i = 0; i < opt.samples; ++i) {
      const PureState psi = sim::random_state(2, rng);
      PureState enc = qotp::encrypt(qotp::encrypt(psi, 0, control), 1, target);
      PureState out = sim::apply_gate(enc, op);
      out = qotp::decrypt(qotp::decrypt(out, 0, kc), 1, kt);
      row.worst_fidelity =
          std::min(row.worst_fidelity, sim::state_fidelity(out, sim::apply_gate(psi, op)));
    }
  } catch (const std::exception& e) {
    row.detail = e.what();
  }
  finish(row);
  return row;
}

IdentityRow gadget_row(EncKey key, AuxSecret aux, bool c, const VerifyOptions& opt, Rng& rng) {
  IdentityRow row;
  row.group = "R-gadget";
  row.case_label = key_label(key) + " y=" + (aux.y ? "1" : "0") + " d=" + (aux.d ? "1" : "0") +
                   " c=" + (c ? "1" : "0");
  const GateOp r = GateOp::single(GateKind::R, 0);
  double worst_prob_error = 0.0;
  try {
    const bool x = opt.rules.correction(key, aux);
    const EncKey updated = opt.rules.r(key, c, aux);
    for (std::size_t i = 0; i < opt.samples; ++i) {
      const PureState psi = sim::random_state(1, rng);
      const PureState reg = sim::tensor(qotp::aux_state(aux), qotp::encrypt(psi, 0, key));
      auto measured = protocol::server_execute_r(reg, 0, 1, sim::BranchSource::forced(c));
      worst_prob_error = std::max(worst_prob_error, std::abs(measured.probability - 0.5));
      const PureState corrected = protocol::apply_correction(std::move(measured.reg), 1, x);
      const PureState out = sim::remove_qubit(corrected, 0, c);
      row.worst_fidelity = std::min(
          row.worst_fidelity, sim::state_fidelity(qotp::decrypt(out, 0, updated), sim::apply_gate(psi, r)));
    }
  } catch (const std::exception& e) {
    row.detail = e.what();
  }
  if (row.detail.empty() && worst_prob_error > kTolerance) {
    row.detail = "branch probability deviates from 0.5 by " + format("%.3g", worst_prob_error);
  }
  finish(row);
  return row;
}

SecurityRow pad_security_row(const VerifyOptions& opt, Rng& rng) {
  SecurityRow row;
  row.name = "one-time pad hides each qubit (reduced state I/2)";
  const sim::DensityMatrix half = sim::DensityMatrix::maximally_mixed(1);
  for (std::size_t i = 0; i < opt.samples; ++i) {
    const std::size_t n = 1 + i % 3;
    const PureState psi = sim::random_state(n, rng);
    for (std::size_t q = 0; q < n; ++q) {
      const std::array<std::size_t, 1> keep = {q};
      const double dist =
          sim::trace_distance(sim::partial_trace_keep(qotp::average_over_keys(psi, q), keep), half);
      row.worst = std::max(row.worst, dist);
    }
  }
  row.passed = row.worst <= kTolerance;
  if (!row.passed) {
    row.detail = "trace distance " + format("%.3g", row.worst);
  }
  return row;
}

SecurityRow correction_uniformity_row(const VerifyOptions& opt) {
  SecurityRow row;
  row.name = "correction bit x is uniform for either a";
  for (bool a : {false, true}) {
    std::array<int, 2> counts{};
    for (const AuxSecret aux : qotp::kAllAuxSecrets) {
      ++counts[opt.rules.correction(EncKey{a, false}, aux) ? 1 : 0];
    }
    row.worst = std::max(row.worst, std::abs(counts[0] - counts[1]) / 4.0);
  }
  row.passed = row.worst == 0.0;
  if (!row.passed) {
    row.detail = "x is biased by " + format("%.2f", row.worst);
  }
  return row;
}

}  // namespace

bool VerificationReport::all_passed() const {
  return std::all_of(identities.begin(), identities.end(), [](const auto& r) { return r.passed; }) &&
         std::all_of(security.begin(), security.end(), [](const auto& r) { return r.passed; });
}

VerificationReport run_verification(const VerifyOptions& options) {
  if (options.samples == 0) {
    throw UsageError("verification needs at least one sample per row");
  }
  Rng rng(options.seed);
  VerificationReport report;
  for (GateKind gate : {GateKind::X, GateKind::Z, GateKind::H, GateKind::P}) {
    for (const EncKey key : qotp::kAllKeys) {
      report.identities.push_back(single_qubit_row(gate, key, options, rng));
    }
  }
  for (const EncKey control : qotp::kAllKeys) {
    for (const EncKey target : qotp::kAllKeys) {
      report.identities.push_back(cnot_row(control, target, options, rng));
    }
  }
  for (const EncKey key : qotp::kAllKeys) {
    for (const AuxSecret aux : qotp::kAllAuxSecrets) {
      for (bool c : {false, true}) {
        report.identities.push_back(gadget_row(key, aux, c, options, rng));
      }
    }
  }
  report.security.push_back(pad_security_row(options, rng));
  report.security.push_back(correction_uniformity_row(options));
  return report;
}

}  // namespace qce::verify
