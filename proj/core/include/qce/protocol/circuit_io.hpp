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

#include <filesystem>
#include <string_view>

#include <nlohmann/json.hpp>

#include "qce/sim/gates.hpp"

namespace qce::protocol {

// Circuit document:
//   {"n_qubits": 2, "ops": [{"kind": "H", "targets": [0]},
//                           {"kind": "CNOT", "targets": [0, 1]}]}
// Gate kinds are spelled "X", "Z", "H", "P", "R", "CNOT".

/// Throws ParseError naming the offending op for malformed input.
sim::Circuit circuit_from_json(const nlohmann::json& doc);
sim::Circuit parse_circuit(std::string_view text);
sim::Circuit load_circuit(const std::filesystem::path& path);

nlohmann::json circuit_to_json(const sim::Circuit& circuit);

/// Amplitudes as [[re, im], ...].
nlohmann::json amplitudes_to_json(const sim::Vector& amplitudes);

}  // namespace qce::protocol
