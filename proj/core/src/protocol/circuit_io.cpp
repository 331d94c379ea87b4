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

#include "qce/protocol/circuit_io.hpp"

#include <fstream>
#include <sstream>
#include <string>

#include "qce/error.hpp"

namespace qce::protocol {

sim::Circuit circuit_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) {
    throw ParseError("circuit document must be a JSON object");
  }
  if (!doc.contains("n_qubits") || !doc["n_qubits"].is_number_unsigned()) {
    throw ParseError("circuit document needs a non-negative integer \"n_qubits\"");
  }
  if (!doc.contains("ops") || !doc["ops"].is_array()) {
    throw ParseError("circuit document needs an \"ops\" array");
  }
  sim::Circuit circuit;
  circuit.n_qubits = doc["n_qubits"].get<std::size_t>();
  if (circuit.n_qubits == 0 || circuit.n_qubits > sim::kMaxQubits) {
    throw ParseError("n_qubits must be in [1, " + std::to_string(sim::kMaxQubits) + "]");
  }
  const auto& ops = doc["ops"];
  for (std::size_t k = 0; k < ops.size(); ++k) {
    const std::string where = "op " + std::to_string(k);
    const auto& entry = ops[k];
    if (!entry.is_object() || !entry.contains("kind") || !entry["kind"].is_string()) {
      throw ParseError(where + ": expected {\"kind\": <string>, \"targets\": [...]}");
    }
    const std::string name = entry["kind"].get<std::string>();
    const auto kind = sim::parse_gate_kind(name);
    if (!kind) {
      throw ParseError(where + ": unknown gate kind \"" + name + "\"");
    }
    if (!entry.contains("targets") || !entry["targets"].is_array()) {
      throw ParseError(where + " (" + name + "): missing \"targets\" array");
    }
    sim::GateOp op{*kind, {}};
    for (const auto& t : entry["targets"]) {
      if (!t.is_number_unsigned()) {
        throw ParseError(where + " (" + name + "): targets must be non-negative integers");
      }
      op.targets.push_back(t.get<std::size_t>());
    }
    try {
      op.validate(circuit.n_qubits);
    } catch (const UsageError& e) {
      throw ParseError(where + ": " + e.what());
    }
    circuit.ops.push_back(std::move(op));
  }
  return circuit;
}

sim::Circuit parse_circuit(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("circuit is not valid JSON: ") + e.what());
  }
  return circuit_from_json(doc);
}

sim::Circuit load_circuit(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open circuit file " + path.string());
  }
  std::ostringstream text;
  text << in.rdbuf();
  return parse_circuit(text.str());
}

nlohmann::json circuit_to_json(const sim::Circuit& circuit) {
  nlohmann::json ops = nlohmann::json::array();
  for (const sim::GateOp& op : circuit.ops) {
    ops.push_back({{"kind", sim::to_string(op.kind)}, {"targets", op.targets}});
  }
  return {{"n_qubits", circuit.n_qubits}, {"ops", std::move(ops)}};
}

nlohmann::json amplitudes_to_json(const sim::Vector& amplitudes) {
  nlohmann::json out = nlohmann::json::array();
  for (Eigen::Index k = 0; k < amplitudes.size(); ++k) {
    out.push_back({amplitudes(k).real(), amplitudes(k).imag()});
  }
  return out;
}

}  // namespace qce::protocol
