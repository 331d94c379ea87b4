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

#include <string>

#include <nlohmann/json.hpp>

#include "qce/tomography/chi.hpp"

namespace qce::tomography {

/// {"n_qubits": n, "basis": ["I", "X", ...], "chi": [[[re, im], ...], ...]}
nlohmann::json chi_to_json(const ChiMatrix& chi);

/// Inverse of chi_to_json. Throws ParseError on malformed or non-physical input.
ChiMatrix chi_from_json(const nlohmann::json& doc);

/// Text bar chart of Re(chi) and Im(chi), one line per element whose
/// magnitude exceeds `threshold`.
std::string render_bars(const ChiMatrix& chi, double threshold = 1e-3, int width = 40);

}  // namespace qce::tomography
