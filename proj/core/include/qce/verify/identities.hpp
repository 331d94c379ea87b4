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

#include "qce/qotp/key_update.hpp"

namespace qce::verify {

struct VerifyOptions {
  std::size_t samples = 100;  // random inputs per identity row
  std::uint64_t seed = 0;
  qotp::KeyUpdateRules rules;  // rules under test
};

struct IdentityRow {
  std::string group;   // "X", "Z", "H", "P", "CNOT" or "R-gadget"
  std::string case_label;  // key bits, e.g. "a=1 b=0"
  bool passed = false;
  double worst_fidelity = 1.0;
  std::string detail;  // empty on success
};

struct SecurityRow {
  std::string name;
  bool passed = false;
  double worst = 0.0;  // worst deviation observed
  std::string detail;
};

struct VerificationReport {
  std::vector<IdentityRow> identities;  // 4+4+4+4 single-qubit, 16 CNOT, 32 gadget
  std::vector<SecurityRow> security;
  bool all_passed() const;
};

/// Exhaustive key-update checks. Every identity row decrypts with the rule
/// set in `options` and compares with the plaintext gate (tolerance 1e-12);
/// gadget rows also require branch probability 0.5 within 1e-12.
VerificationReport run_verification(const VerifyOptions& options = {});

}  // namespace qce::verify
