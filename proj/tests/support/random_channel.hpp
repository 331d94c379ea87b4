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

#include <vector>

#include <Eigen/Dense>

#include "oracle.hpp"
#include "qce/random.hpp"
#include "qce/sim/density_matrix.hpp"
#include "qce/tomography/channels.hpp"

namespace oracle {

/// Kraus operators of a random CPTP map: blocks of a Haar-ish isometry
/// from d to d * rank.
inline std::vector<Mat> random_kraus(std::size_t n, std::size_t rank, qce::Rng& rng) {
  const Eigen::Index d = Eigen::Index{1} << n;
  Mat g(d * static_cast<Eigen::Index>(rank), d);
  for (Eigen::Index i = 0; i < g.rows(); ++i) {
    for (Eigen::Index j = 0; j < g.cols(); ++j) {
      g(i, j) = C(rng.normal(), rng.normal());
    }
  }
  const Eigen::HouseholderQR<Mat> qr(g);
  const Mat v = qr.householderQ() * Mat::Identity(g.rows(), d);
  std::vector<Mat> kraus;
  for (std::size_t k = 0; k < rank; ++k) {
    kraus.push_back(v.block(static_cast<Eigen::Index>(k) * d, 0, d, d));
  }
  return kraus;
}

inline Mat apply_kraus(const std::vector<Mat>& kraus, const Mat& rho) {
  Mat out = Mat::Zero(rho.rows(), rho.cols());
  for (const auto& k : kraus) {
    out += k * rho * k.adjoint();
  }
  return out;
}

inline qce::tomography::QuantumChannel kraus_channel(std::vector<Mat> kraus, std::size_t n) {
  return {n, [kraus](const qce::sim::DensityMatrix& rho) {
            Mat out = apply_kraus(kraus, rho.matrix());
            out = 0.5 * (out + out.adjoint()).eval();
            return qce::sim::DensityMatrix::from_matrix(out / out.trace().real());
          }};
}

}  // namespace oracle
