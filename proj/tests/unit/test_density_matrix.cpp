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

#include <gtest/gtest.h>

#include <array>
#include <utility>
#include <vector>

#include "oracle.hpp"
#include "qce/error.hpp"
#include "qce/qotp/pad.hpp"
#include "qce/random.hpp"
#include "qce/sim/density_matrix.hpp"

namespace {

using qce::sim::DensityMatrix;
using qce::sim::PureState;

double max_diff(const oracle::Mat& a, const oracle::Mat& b) { return (a - b).cwiseAbs().maxCoeff(); }

TEST(DensityOf, ZeroIsDiagOneZero) {
  oracle::Mat want = oracle::Mat::Zero(2, 2);
  want(0, 0) = 1.0;
  EXPECT_LT(max_diff(density_of(PureState::zero()).matrix(), want), 1e-15);
}

TEST(Mix, EqualBasisStatesGiveHalfIdentity) {
  const std::vector<std::pair<double, PureState>> members = {{0.5, PureState::zero()},
                                                             {0.5, PureState::one()}};
  EXPECT_LT(max_diff(qce::sim::mix(members).matrix(), oracle::I2() / 2.0), 1e-15);
}

TEST(Mix, FourEncryptionsGiveHalfIdentity) {
  qce::Rng rng(1);
  const PureState psi = qce::sim::random_state(1, rng);
  std::vector<std::pair<double, PureState>> members;
  for (const auto key : qce::qotp::kAllKeys) {
    members.emplace_back(0.25, qce::qotp::encrypt(psi, 0, key));
  }
  EXPECT_LT(max_diff(qce::sim::mix(members).matrix(), oracle::I2() / 2.0), 1e-12);
}

TEST(Mix, RejectsBadWeights) {
  const std::vector<std::pair<double, PureState>> short_sum = {{0.5, PureState::zero()},
                                                               {0.4, PureState::one()}};
  EXPECT_THROW(qce::sim::mix(short_sum), qce::UsageError);
  const std::vector<std::pair<double, PureState>> negative = {{1.5, PureState::zero()},
                                                              {-0.5, PureState::one()}};
  EXPECT_THROW(qce::sim::mix(negative), qce::UsageError);
  const std::vector<std::pair<double, PureState>> mismatched = {{0.5, PureState(1)},
                                                                {0.5, PureState(2)}};
  EXPECT_THROW(qce::sim::mix(mismatched), qce::UsageError);
}

TEST(FromMatrix, ValidatesInvariants) {
  oracle::Mat not_hermitian = oracle::I2() / 2.0;
  not_hermitian(0, 1) = 0.1;
  EXPECT_THROW(DensityMatrix::from_matrix(not_hermitian), qce::UsageError);
  EXPECT_THROW(DensityMatrix::from_matrix(oracle::I2()), qce::UsageError);
  oracle::Mat negative = oracle::Mat::Zero(2, 2);
  negative(0, 0) = 1.5;
  negative(1, 1) = -0.5;
  EXPECT_THROW(DensityMatrix::from_matrix(negative), qce::UsageError);
  EXPECT_THROW(DensityMatrix::from_matrix(oracle::Mat::Identity(3, 3) / 3.0), qce::UsageError);
}

TEST(TraceDistance, Examples) {
  const DensityMatrix half = DensityMatrix::maximally_mixed(1);
  EXPECT_NEAR(trace_distance(half, half), 0.0, 1e-15);
  EXPECT_NEAR(trace_distance(density_of(PureState::zero()), half), 0.5, 1e-15);
  EXPECT_NEAR(trace_distance(density_of(PureState::zero()), density_of(PureState::one())), 1.0,
              1e-15);
  EXPECT_THROW(trace_distance(half, DensityMatrix::maximally_mixed(2)), qce::UsageError);
}

TEST(TraceDistance, PureStatesMatchClosedForm) {
  qce::Rng rng(2);
  for (int i = 0; i < 50; ++i) {
    const PureState a = qce::sim::random_state(2, rng), b = qce::sim::random_state(2, rng);
    const double want = std::sqrt(1.0 - oracle::fidelity(a.amplitudes(), b.amplitudes()));
    EXPECT_NEAR(trace_distance(density_of(a), density_of(b)), want, 1e-12);
  }
}

TEST(PartialTrace, ProductStateFactors) {
  qce::Rng rng(3);
  const PureState a = qce::sim::random_state(1, rng), b = qce::sim::random_state(1, rng);
  const DensityMatrix joint = density_of(qce::sim::tensor(b, a));
  const std::array<std::size_t, 1> keep0 = {0}, keep1 = {1};
  EXPECT_LT(trace_distance(partial_trace_keep(joint, keep0), density_of(a)), 1e-12);
  EXPECT_LT(trace_distance(partial_trace_keep(joint, keep1), density_of(b)), 1e-12);
  const std::array<std::size_t, 2> swapped = {1, 0};
  EXPECT_LT(trace_distance(partial_trace_keep(joint, swapped),
                           density_of(qce::sim::tensor(a, b))),
            1e-12);
}

TEST(SpectralDecomposition, Reassembles) {
  const std::vector<std::pair<double, PureState>> members = {{0.7, PureState::plus()},
                                                             {0.3, PureState::plus_y()}};
  const DensityMatrix rho = qce::sim::mix(members);
  oracle::Mat back = oracle::Mat::Zero(2, 2);
  for (const auto& [w, s] : rho.spectral_decomposition()) {
    back += w * s.amplitudes() * s.amplitudes().adjoint();
  }
  EXPECT_LT(max_diff(back, rho.matrix()), 1e-12);
}

TEST(BasisProbabilities, Diagonal) {
  const auto p = qce::sim::basis_probabilities(density_of(PureState::plus()));
  ASSERT_EQ(p.size(), 2u);
  EXPECT_NEAR(p[0], 0.5, 1e-15);
  EXPECT_NEAR(p[1], 0.5, 1e-15);
  EXPECT_NEAR(qce::sim::fidelity(density_of(PureState::plus()), PureState::minus()), 0.0, 1e-15);
}

}  // namespace
