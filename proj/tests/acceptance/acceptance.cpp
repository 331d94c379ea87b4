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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "oracle.hpp"
#include "qce/protocol/server_ops.hpp"
#include "qce/protocol/session.hpp"
#include "qce/qotp/key_update.hpp"
#include "qce/qotp/pad.hpp"
#include "qce/random.hpp"
#include "qce/sim/density_matrix.hpp"
#include "qce/sim/random_circuit.hpp"
#include "qce/tomography/channels.hpp"
#include "qce/tomography/chi.hpp"
#include "qce/tomography/monte_carlo.hpp"
#include "qce/tomography/plan.hpp"
#include "qce/tomography/reconstruct.hpp"

namespace {

using qce::qotp::AuxSecret;
using qce::qotp::EncKey;
using qce::sim::GateKind;
using qce::sim::GateOp;
using qce::sim::PureState;
namespace tomo = qce::tomography;

struct Outcome {
  bool passed;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double budget_s;
  std::function<Outcome()> body;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

/// Plaintext reference: full-register unitary from oracle matrices.
oracle::Mat oracle_unitary(const qce::sim::Circuit& c) {
  const auto dim = Eigen::Index{1} << c.n_qubits;
  oracle::Mat u = oracle::Mat::Identity(dim, dim);
  for (const auto& op : c.ops) {
    u = (op.kind == GateKind::CNOT
             ? oracle::cnot(op.targets[0], op.targets[1], c.n_qubits)
             : oracle::embed(oracle::by_name(std::string(qce::sim::to_string(op.kind))),
                             op.targets[0], c.n_qubits)) *
        u;
  }
  return u;
}

Outcome clifford_soundness() {
  qce::Rng rng(1001);
  double worst = 1.0;
  std::size_t cases = 0;
  for (GateKind g : {GateKind::X, GateKind::Z, GateKind::H, GateKind::P}) {
    const GateOp op = GateOp::single(g, 0);
    const oracle::Mat u = oracle::by_name(std::string(qce::sim::to_string(g)));
    for (const EncKey k : qce::qotp::kAllKeys) {
      const EncKey k2 = qce::qotp::update_clifford(g, k);
      for (int i = 0; i < 100; ++i, ++cases) {
        const PureState psi = qce::sim::random_state(1, rng);
        const PureState out = qce::qotp::decrypt(
            qce::protocol::server_execute_clifford(qce::qotp::encrypt(psi, 0, k), op), 0, k2);
        worst = std::min(worst, oracle::fidelity(out.amplitudes(), u * psi.amplitudes()));
      }
    }
  }
  const oracle::Mat cn = oracle::cnot(0, 1, 2);
  for (const EncKey kc : qce::qotp::kAllKeys) {
    for (const EncKey kt : qce::qotp::kAllKeys) {
      const auto [c2, t2] = qce::qotp::update_cnot(kc, kt);
      for (int i = 0; i < 100; ++i, ++cases) {
        const PureState psi = qce::sim::random_state(2, rng);
        PureState s = qce::qotp::encrypt(qce::qotp::encrypt(psi, 0, kc), 1, kt);
        s = qce::protocol::server_execute_clifford(s, GateOp::cnot(0, 1));
        s = qce::qotp::decrypt(qce::qotp::decrypt(s, 0, c2), 1, t2);
        worst = std::min(worst, oracle::fidelity(s.amplitudes(), cn * psi.amplitudes()));
      }
    }
  }
  return {worst >= 1 - 1e-12, std::to_string(cases) + " cases, min fidelity 1 - " + sci(1 - worst)};
}

Outcome gadget_soundness() {
  qce::Rng rng(1002);
  double worst = 1.0, worst_p = 0.0;
  std::size_t combos = 0;
  for (const EncKey k : qce::qotp::kAllKeys) {
    for (const AuxSecret s : qce::qotp::kAllAuxSecrets) {
      for (bool c : {false, true}) {
        ++combos;
        const EncKey k2 = qce::qotp::update_r(k, c, s);
        for (int i = 0; i < 50; ++i) {
          const PureState psi = qce::sim::random_state(1, rng);
          const PureState reg =
              qce::sim::tensor(qce::qotp::aux_state(s), qce::qotp::encrypt(psi, 0, k));
          auto m = qce::protocol::server_execute_r(reg, 0, 1, qce::sim::BranchSource::forced(c));
          worst_p = std::max(worst_p, std::abs(m.probability - 0.5));
          const PureState aux = qce::sim::remove_qubit(
              qce::protocol::apply_correction(m.reg, 1, qce::qotp::correction_bit(k, s)), 0, c);
          const PureState dec = qce::qotp::decrypt(aux, 0, k2);
          worst = std::min(worst, oracle::fidelity(dec.amplitudes(), oracle::R() * psi.amplitudes()));
        }
      }
    }
  }
  return {combos == 32 && worst >= 1 - 1e-12 && worst_p <= 1e-12,
          std::to_string(combos) + " combos x 50 inputs, min fidelity 1 - " + sci(1 - worst) +
              ", max |p - 0.5| " + sci(worst_p)};
}

struct SessionRecord {
  std::vector<std::string> log;  // JSON lines
  std::vector<qce::protocol::Message> messages;
  std::size_t r_count;
};

std::vector<SessionRecord>& sessions() {
  static std::vector<SessionRecord> s;
  return s;
}

Outcome end_to_end() {
  qce::Rng rng(1003);
  double worst = 1.0;
  std::size_t min_r = 1000, max_n = 0;
  sessions().clear();
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 1 + static_cast<std::size_t>(i % 5);
    const auto circuit = qce::sim::random_circuit({n, 20, 5, 10}, rng);
    const PureState input = qce::sim::random_state(n, rng);
    qce::protocol::SessionConfig cfg;
    cfg.circuit = circuit;
    cfg.input = input;
    cfg.seed = rng();
    cfg.mode = qce::protocol::BranchMode::Sampled;
    const auto result = qce::protocol::run_session(cfg);
    const oracle::Vec want = oracle_unitary(circuit) * input.amplitudes();
    worst = std::min(worst, oracle::fidelity(result.decrypted_output.amplitudes(), want));
    min_r = std::min(min_r, circuit.r_count());
    max_n = std::max(max_n, n);

    SessionRecord rec;
    rec.messages = result.transcript.messages;
    std::ostringstream log;
    qce::protocol::write_transcript_jsonl(result.transcript, log);
    std::istringstream lines(log.str());
    for (std::string line; std::getline(lines, line);) {
      rec.log.push_back(line);
    }
    rec.r_count = circuit.r_count();
    sessions().push_back(std::move(rec));
  }
  return {worst >= 1 - 1e-9 && min_r >= 5 && max_n <= 5,
          "100 circuits (1-5 qubits, 20 gates, >= " + std::to_string(min_r) +
              " R), min fidelity 1 - " + sci(1 - worst)};
}

double exact_fidelity(GateKind g, bool decrypted) {
  const auto plan = tomo::TomographyPlan::standard(qce::sim::arity(g));
  qce::Rng rng(0);
  const auto ch = decrypted ? tomo::channel_of_gate_decrypted(g) : tomo::channel_of_gate_server_view(g);
  const auto chi = tomo::reconstruct_chi(tomo::collect(ch, plan, rng), plan);
  return tomo::process_fidelity(chi, decrypted ? tomo::ideal_chi(g)
                                               : tomo::depolarizing_chi(qce::sim::arity(g)));
}

Outcome decrypted_tomography() {
  double worst = 1.0;
  for (GateKind g : qce::sim::kAllGateKinds) {
    worst = std::min(worst, exact_fidelity(g, true));
  }
  return {worst >= 1 - 1e-9, "X Z H P R CNOT vs ideal, min fidelity 1 - " + sci(1 - worst)};
}

Outcome server_view() {
  double worst = 1.0;
  for (GateKind g : qce::sim::kAllGateKinds) {
    worst = std::min(worst, exact_fidelity(g, false));
  }
  qce::Rng rng(1005);
  double worst_td = 0.0;
  const auto half = qce::sim::DensityMatrix::maximally_mixed(1);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 1 + static_cast<std::size_t>(i % 3);
    const PureState psi = qce::sim::random_state(n, rng);
    const std::size_t q = static_cast<std::size_t>(i) % n;
    const std::vector<std::size_t> keep = {q};
    worst_td = std::max(worst_td, trace_distance(partial_trace_keep(qce::qotp::average_over_keys(psi, q), keep), half));
  }
  return {worst >= 1 - 1e-9 && worst_td <= 1e-12,
          "six gates vs depolarizing, min fidelity 1 - " + sci(1 - worst) +
              "; key-averaged reduced state max trace distance " + sci(worst_td)};
}

Outcome sampled_pipeline() {
  bool ok = true;
  std::ostringstream detail;
  detail << "shots 1e4, 100 MC iterations:";
  for (GateKind g : qce::sim::kAllGateKinds) {
    const std::size_t n = qce::sim::arity(g);
    const auto plan = tomo::TomographyPlan::standard(n, 10000);
    const auto ideal = tomo::ideal_chi(g);
    qce::Rng rng(0);
    const auto counts = tomo::collect(tomo::channel_of_gate_decrypted(g), plan, rng);
    const double f = tomo::process_fidelity(tomo::reconstruct_chi(counts, plan), ideal);
    const auto mc = tomo::monte_carlo_uncertainty(counts, plan, 100, rng, ideal);
    const double exact = exact_fidelity(g, true);
    const double z = mc.stddev > 0 ? std::abs(mc.mean - exact) / mc.stddev : INFINITY;
    const bool gate_ok = f >= 0.99 && mc.mean >= 0.99 && mc.stddev <= 0.01 && z <= 3.0;
    ok = ok && gate_ok;
    char buf[160];
    std::snprintf(buf, sizeof(buf), " %s F=%.6f MC=%.6f+/-%.2g (%.2f std)%s",
                  std::string(qce::sim::to_string(g)).c_str(), f, mc.mean, mc.stddev, z,
                  gate_ok ? "" : " !");
    detail << buf;
  }
  return {ok, detail.str()};
}

Outcome transcript_leaks() {
  if (sessions().empty()) {
    end_to_end();
  }
  std::size_t c_ones = 0, c_total = 0, x_ones = 0, x_total = 0, bad = 0, leaks = 0;
  const std::set<std::string> allowed = {"seq", "direction", "kind", "bit", "handle", "gate_index"};
  for (const auto& s : sessions()) {
    // Classical-only mid-computation: every message between the quantum
    // prefix and EncryptedOutput carries exactly one bit and no handle.
    std::size_t i = 0;
    while (i < s.messages.size() &&
           (s.messages[i].kind == qce::protocol::MessageKind::EncryptedInput ||
            s.messages[i].kind == qce::protocol::MessageKind::AuxQubit)) {
      ++i;
    }
    std::size_t pairs = 0;
    for (; i < s.messages.size(); ++i) {
      const auto& m = s.messages[i];
      if (m.kind == qce::protocol::MessageKind::EncryptedOutput) break;
      if (!qce::protocol::carries_bit(m.kind) || !m.bit || m.handle) ++bad;
      if (m.kind == qce::protocol::MessageKind::OutcomeC) {
        ++c_total;
        c_ones += *m.bit ? 1 : 0;
      } else if (m.kind == qce::protocol::MessageKind::CorrectionX) {
        ++x_total;
        x_ones += *m.bit ? 1 : 0;
        ++pairs;
      }
    }
    if (pairs != s.r_count || i + 1 != s.messages.size()) ++bad;
    // Server-visible records: only whitelisted fields; quantum payloads are
    // opaque handles; no field named after a secret.
    for (const auto& line : s.log) {
      const auto rec = nlohmann::json::parse(line);
      for (const auto& [key, value] : rec.items()) {
        if (!allowed.count(key)) ++leaks;
      }
      if (rec.contains("handle") && rec.contains("bit")) ++leaks;
      if (line.find("\"a\"") != std::string::npos || line.find("\"y\"") != std::string::npos ||
          line.find("\"d\"") != std::string::npos || line.find("\"b\"") != std::string::npos ||
          line.find("key") != std::string::npos || line.find("secret") != std::string::npos) {
        ++leaks;
      }
    }
  }
  auto z = [](std::size_t ones, std::size_t total) {
    return std::abs(static_cast<double>(ones) - total / 2.0) / std::sqrt(total / 4.0);
  };
  const double zc = z(c_ones, c_total), zx = z(x_ones, x_total);
  char buf[200];
  std::snprintf(buf, sizeof(buf),
                "%zu sessions, %zu c bits (%.2f std), %zu x bits (%.2f std), %zu ordering "
                "violations, %zu leaking fields",
                sessions().size(), c_total, zc, x_total, zx, bad, leaks);
  return {bad == 0 && leaks == 0 && zc <= 5 && zx <= 5 && c_total > 0, buf};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Clifford key-update soundness", 5, clifford_soundness},
      {2, "R-gadget soundness", 10, gadget_soundness},
      {3, "end-to-end sessions", 60, end_to_end},
      {4, "decrypted tomography", 60, decrypted_tomography},
      {5, "server view is depolarizing", 60, server_view},
      {6, "sampled-mode statistics", 300, sampled_pipeline},
      {7, "transcript leak check", 60, transcript_leaks},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out{false, ""};
    try {
      out = c.body();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < c.budget_s;
    const bool pass = out.passed && in_time;
    failures += pass ? 0 : 1;
    std::printf("%s [%d] %s: %s (%.2f s, budget %.0f s%s)\n", pass ? "PASS" : "FAIL", c.id,
                c.name.c_str(), out.detail.c_str(), secs, c.budget_s, in_time ? "" : ", over budget");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
