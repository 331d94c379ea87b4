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

#include "qce/commands.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

#include "qce/error.hpp"
#include "qce/protocol/circuit_io.hpp"
#include "qce/protocol/session.hpp"
#include "qce/random.hpp"
#include "qce/tomography/channels.hpp"
#include "qce/tomography/chi.hpp"
#include "qce/tomography/chi_io.hpp"
#include "qce/tomography/monte_carlo.hpp"
#include "qce/tomography/plan.hpp"
#include "qce/tomography/reconstruct.hpp"
#include "qce/verify/identities.hpp"

namespace qce::cli {

using nlohmann::json;

namespace {

constexpr double kExactThreshold = 1.0 - 1e-9;
constexpr double kSampledThreshold = 0.99;

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

protocol::BranchMode parse_mode(const std::string& mode) {
  if (mode == "exact") {
    return protocol::BranchMode::Exact;
  }
  if (mode == "sampled") {
    return protocol::BranchMode::Sampled;
  }
  throw UsageError("unknown mode \"" + mode + "\" (expected exact or sampled)");
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw UsageError("cannot open output file " + path);
  }
  out << text;
}

json transcript_json(const protocol::Transcript& t) {
  json messages = json::array();
  for (const auto& m : t.messages) {
    messages.push_back(protocol::message_to_json(m));
  }
  json r_gates = json::array();
  for (const auto& r : t.r_gates) {
    r_gates.push_back({{"gate_index", r.gate_index}, {"c", r.c ? 1 : 0}});
  }
  json relabels = json::array();
  for (const auto& r : t.relabels) {
    relabels.push_back({{"gate_index", r.gate_index},
                        {"logical_qubit", r.logical_qubit},
                        {"measured_physical", r.measured_physical},
                        {"new_physical", r.new_physical}});
  }
  return {{"seed", t.seed}, {"messages", messages}, {"r_gates", r_gates}, {"relabels", relabels}};
}

std::string bit_string(const std::vector<bool>& bits) {
  std::string s;
  for (bool b : bits) {
    s.push_back(b ? '1' : '0');
  }
  return s;
}

}  // namespace

void CliConfig::validate() const {
  parse_mode(mode);
  if (mode == "sampled" && shots < 1) {
    throw UsageError("sampled mode requires --shots >= 1, got " + std::to_string(shots));
  }
  if (shots < 0) {
    throw UsageError("--shots must be non-negative");
  }
}

CommandResult cmd_run(const CliConfig& config) {
  config.validate();
  if (config.circuit_path.empty()) {
    throw UsageError("run requires --circuit");
  }
  const sim::Circuit circuit = protocol::load_circuit(config.circuit_path);
  protocol::SessionConfig session;
  session.circuit = circuit;
  session.input = sim::PureState(circuit.n_qubits);
  session.seed = config.seed;
  session.mode = parse_mode(config.mode);
  const protocol::SessionResult result = protocol::run_session(session);
  const sim::PureState reference = protocol::reference_apply(circuit, session.input);

  double worst = 1.0;
  json branches = json::array();
  for (const auto& branch : result.branches) {
    const double f = sim::state_fidelity(branch.decrypted_output, reference);
    worst = std::min(worst, f);
    branches.push_back(
        {{"c", bit_string(branch.c_bits)}, {"probability", branch.probability}, {"fidelity", f}});
  }
  const bool ok = worst >= kExactThreshold;

  CommandResult out;
  out.exit_code = ok ? kExitOk : kExitCheckFailed;
  out.document = {
      {"status", ok ? "ok" : "fail"},
      {"command", "run"},
      {"mode", config.mode},
      {"seed", config.seed},
      {"circuit", protocol::circuit_to_json(circuit)},
      {"input", "zero"},
      {"decrypted_output", protocol::amplitudes_to_json(result.decrypted_output.amplitudes())},
      {"fidelity", {{"reference", "plaintext circuit"}, {"value", worst}, {"threshold", kExactThreshold}}},
      {"branches", branches},
      {"transcript", transcript_json(result.transcript)},
  };
  if (!config.transcript_path.empty()) {
    std::ostringstream log;
    protocol::write_transcript_jsonl(result.transcript, log);
    write_text(config.transcript_path, log.str());
  }
  out.summary = std::string("run ") + (ok ? "ok" : "FAIL") + ": " +
                std::to_string(circuit.ops.size()) + " gates (" +
                std::to_string(circuit.r_count()) + " R) on " + std::to_string(circuit.n_qubits) +
                " qubits, " + std::to_string(result.branches.size()) + " path(s), fidelity " +
                fixed(worst, 12);
  return out;
}

CommandResult cmd_qpt(const CliConfig& config) {
  config.validate();
  if (config.gate.empty()) {
    throw UsageError("qpt requires --gate");
  }
  const std::optional<sim::GateKind> parsed = sim::parse_gate_kind(config.gate);
  if (!parsed) {
    throw UsageError("unknown gate \"" + config.gate + "\" (expected X, Z, H, P, R or CNOT)");
  }
  const sim::GateKind gate = *parsed;
  if (config.view != "decrypted" && config.view != "server") {
    throw UsageError("unknown view \"" + config.view + "\" (expected decrypted or server)");
  }
  const bool decrypted = config.view == "decrypted";
  const bool sampled = config.mode == "sampled";
  const std::size_t n = sim::arity(gate);

  const tomography::TomographyPlan plan =
      tomography::TomographyPlan::standard(n, sampled ? config.shots : 0);
  const tomography::QuantumChannel channel =
      decrypted ? tomography::channel_of_gate_decrypted(gate)
                : tomography::channel_of_gate_server_view(gate);
  Rng rng(config.seed);
  const tomography::CountTable counts = tomography::collect(channel, plan, rng);
  tomography::ReconstructionInfo info;
  const tomography::ProcessReconstructor reconstructor(plan);
  const tomography::ChiMatrix chi = reconstructor.reconstruct(counts, {}, &info);
  const tomography::ChiMatrix reference =
      decrypted ? tomography::ideal_chi(gate) : tomography::depolarizing_chi(n);
  const double fidelity = tomography::process_fidelity(chi, reference);
  const double threshold = sampled ? kSampledThreshold : kExactThreshold;
  bool ok = fidelity >= threshold;

  json fid = {{"reference", decrypted ? "ideal " + std::string(sim::to_string(gate))
                                      : std::string("completely depolarizing")},
              {"value", fidelity},
              {"threshold", threshold}};
  std::string mc_text;
  if (sampled && config.mc_iterations > 0) {
    const auto mc = tomography::monte_carlo_uncertainty(counts, plan, config.mc_iterations, rng,
                                                        reference);
    fid["monte_carlo"] = {
        {"iterations", config.mc_iterations}, {"mean", mc.mean}, {"std", mc.stddev}};
    mc_text = ", MC " + fixed(mc.mean, 4) + " +/- " + fixed(mc.stddev, 4);
  }

  CommandResult out;
  out.exit_code = ok ? kExitOk : kExitCheckFailed;
  json doc = tomography::chi_to_json(chi);
  doc["status"] = ok ? "ok" : "fail";
  doc["command"] = "qpt";
  doc["gate"] = std::string(sim::to_string(gate));
  doc["view"] = config.view;
  doc["mode"] = config.mode;
  doc["shots"] = sampled ? config.shots : 0;
  doc["seed"] = config.seed;
  doc["fidelity"] = fid;
  doc["reconstruction"] = {{"method", sampled ? "maximum likelihood" : "linear inversion"},
                           {"iterations", info.iterations},
                           {"converged", info.converged}};
  out.document = std::move(doc);
  out.summary = "qpt " + std::string(sim::to_string(gate)) + " " + config.view + " " +
                config.mode + (ok ? " ok" : " FAIL") + ": fidelity " + fixed(fidelity, 9) +
                " vs " + fid["reference"].get<std::string>() + mc_text;
  return out;
}

CommandResult cmd_verify(const CliConfig& config) {
  verify::VerifyOptions options;
  options.seed = config.seed;
  const verify::VerificationReport report = verify::run_verification(options);

  json identities = json::array();
  std::ostringstream table;
  std::size_t failed = 0;
  for (const auto& row : report.identities) {
    identities.push_back({{"group", row.group},
                          {"case", row.case_label},
                          {"passed", row.passed},
                          {"worst_fidelity", row.worst_fidelity},
                          {"detail", row.detail}});
    table << (row.passed ? "PASS " : "FAIL ") << row.group << " [" << row.case_label << "]";
    if (!row.detail.empty()) {
      table << " " << row.detail;
    }
    table << '\n';
    failed += row.passed ? 0 : 1;
  }
  json security = json::array();
  for (const auto& row : report.security) {
    security.push_back(
        {{"name", row.name}, {"passed", row.passed}, {"worst", row.worst}, {"detail", row.detail}});
    table << (row.passed ? "PASS " : "FAIL ") << row.name;
    if (!row.detail.empty()) {
      table << " " << row.detail;
    }
    table << '\n';
    failed += row.passed ? 0 : 1;
  }
  const bool ok = report.all_passed();
  CommandResult out;
  out.exit_code = ok ? kExitOk : kExitCheckFailed;
  out.text = table.str();
  out.document = {{"status", ok ? "ok" : "fail"},
                  {"command", "verify"},
                  {"seed", config.seed},
                  {"samples", options.samples},
                  {"identities", identities},
                  {"security", security}};
  const std::size_t total = report.identities.size() + report.security.size();
  out.summary = std::string("verify ") + (ok ? "ok" : "FAIL") + ": " +
                std::to_string(total - failed) + "/" + std::to_string(total) + " checks passed (" +
                std::to_string(report.identities.size()) + " identities, " +
                std::to_string(report.security.size()) + " security)";
  return out;
}

CommandResult cmd_report(const CliConfig& config) {
  if (config.input_path.empty()) {
    throw UsageError("report requires --in");
  }
  std::ifstream in(config.input_path);
  if (!in) {
    throw UsageError("cannot open " + config.input_path);
  }
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(config.input_path + ": " + e.what());
  }
  if (!doc.contains("chi")) {
    throw ParseError(config.input_path + ": not a chi document (status " +
                     doc.value("status", std::string("missing")) + ")");
  }
  const tomography::ChiMatrix chi = tomography::chi_from_json(doc);

  std::ostringstream text;
  std::string title = "chi";
  if (doc.contains("gate")) {
    title += " " + doc.value("gate", std::string()) + " (" + doc.value("view", std::string()) +
             ", " + doc.value("mode", std::string()) + ")";
  }
  text << title << '\n';
  if (doc.contains("fidelity")) {
    const json& f = doc["fidelity"];
    text << "fidelity " << fixed(f.value("value", 0.0), 9) << " vs "
         << f.value("reference", std::string("?"));
    if (f.contains("monte_carlo")) {
      text << " (Monte Carlo " << fixed(f["monte_carlo"].value("mean", 0.0), 4) << " +/- "
           << fixed(f["monte_carlo"].value("std", 0.0), 4) << ", "
           << f["monte_carlo"].value("iterations", 0) << " iterations)";
    }
    text << '\n';
  }
  text << tomography::render_bars(chi);

  CommandResult out;
  out.document = text.str();
  if (config.output_path.empty()) {
    out.text = text.str();
  }
  out.summary = "report ok: " + title;
  return out;
}

CommandResult execute(const CliConfig& config) {
  CommandResult result;
  try {
    if (config.subcommand == "run") {
      result = cmd_run(config);
    } else if (config.subcommand == "qpt") {
      result = cmd_qpt(config);
    } else if (config.subcommand == "verify") {
      result = cmd_verify(config);
    } else if (config.subcommand == "report") {
      result = cmd_report(config);
    } else {
      throw UsageError("unknown subcommand \"" + config.subcommand + "\"");
    }
  } catch (const std::exception& e) {
    const bool parse = dynamic_cast<const ParseError*>(&e) != nullptr;
    result = CommandResult{};
    result.exit_code = kExitUsage;
    result.document = {{"status", "error"},
                       {"command", config.subcommand},
                       {"error", parse ? "parse" : "usage"},
                       {"message", e.what()}};
    result.summary = config.subcommand + " error: " + e.what();
  }
  if (!config.output_path.empty()) {
    try {
      write_text(config.output_path, result.document.is_string()
                                         ? result.document.get<std::string>()
                                         : result.document.dump(2) + "\n");
    } catch (const std::exception& e) {
      result.exit_code = kExitUsage;
      result.summary += std::string(" (") + e.what() + ")";
    }
  }
  return result;
}

}  // namespace qce::cli
