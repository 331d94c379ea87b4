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
#include <vector>

#include "qce/random.hpp"
#include "qce/tomography/chi.hpp"
#include "qce/tomography/plan.hpp"
#include "qce/tomography/reconstruct.hpp"

namespace qce::tomography {

enum class Resample {
  Poisson,
  Identity,  // debug switch: every iteration reuses the counts unchanged
};

struct MonteCarloResult {
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation (n - 1)
  std::vector<double> samples;
};

/// Error bar on a sampled-mode fidelity. Each iteration replaces every count
/// by a Poisson draw with that count as its mean, reconstructs chi and
/// records its fidelity against `ideal`.
///
/// Throws UsageError for exact-mode tables or fewer than two iterations.
MonteCarloResult monte_carlo_uncertainty(const CountTable& counts, const TomographyPlan& plan,
                                         std::size_t iterations, Rng& rng,
                                         const ChiMatrix& ideal,
                                         Resample resample = Resample::Poisson,
                                         const MleOptions& options = {});

}  // namespace qce::tomography
