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

#include "qce/tomography/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qce/error.hpp"

namespace qce::tomography {

MonteCarloResult monte_carlo_uncertainty(const CountTable& counts, const TomographyPlan& plan,
                                         std::size_t iterations, Rng& rng,
                                         const ChiMatrix& ideal, Resample resample,
                                         const MleOptions& options) {
  if (counts.exact) {
    throw UsageError("Monte Carlo resampling needs sampled counts, not exact probabilities");
  }
  if (iterations < 2) {
    throw UsageError("Monte Carlo needs at least 2 iterations, got " +
                     std::to_string(iterations));
  }
  const ProcessReconstructor reconstructor(plan);
  const Rng base(rng());
  MonteCarloResult result;
  result.samples.reserve(iterations);
  for (std::size_t it = 0; it < iterations; ++it) {
    CountTable noisy = counts;
    if (resample == Resample::Poisson) {
      Rng stream = base.derive(it);
      for (double& x : noisy.values) {
        x = static_cast<double>(stream.poisson(x));
      }
    }
    result.samples.push_back(process_fidelity(reconstructor.reconstruct(noisy, options), ideal));
  }

  // Shifted-data moments: exact zero spread for identical samples.
  const double shift = result.samples.front();
  double sum = 0.0;
  double sq = 0.0;
  for (double f : result.samples) {
    sum += f - shift;
    sq += (f - shift) * (f - shift);
  }
  const auto n = static_cast<double>(iterations);
  result.mean = shift + sum / n;
  result.stddev = std::sqrt(std::max(0.0, (sq - sum * sum / n) / (n - 1.0)));
  return result;
}

}  // namespace qce::tomography
