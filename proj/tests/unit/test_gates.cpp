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

#include <complex>

#include "oracle.hpp"
#include "qce/error.hpp"
#include "qce/sim/gates.hpp"

namespace {

using qce::sim::Circuit;
using qce::sim::GateKind;
using qce::sim::GateOp;
using qce::sim::gate_matrix;

double max_diff(const oracle::Mat& a, const oracle::Mat& b) { return (a - b).cwiseAbs().maxCoeff(); }

TEST(GateMatrix, PIsDiagOneI) {
  EXPECT_LT(max_diff(gate_matrix(GateKind::P), oracle::m2(1, 0, 0, {0, 1})), 1e-15);
}

TEST(GateMatrix, RSquaredIsP) {
  const auto r = gate_matrix(GateKind::R);
  EXPECT_LT(max_diff(r * r, gate_matrix(GateKind::P)), 1e-15);
}

TEST(GateMatrix, HadamardIsInvolution) {
  const auto h = gate_matrix(GateKind::H);
  EXPECT_LT(max_diff(h * h, oracle::I2()), 1e-15);
}

TEST(GateMatrix, AlgebraicIdentities) {
  const auto x = gate_matrix(GateKind::X), z = gate_matrix(GateKind::Z),
             h = gate_matrix(GateKind::H), p = gate_matrix(GateKind::P);
  EXPECT_LT(max_diff(p * p, z), 1e-12);
  EXPECT_LT(max_diff(h * x * h, z), 1e-12);
}

TEST(GateMatrix, MatchesOracleDefinitions) {
  for (const char* name : {"X", "Z", "H", "P", "R"}) {
    const GateKind kind = *qce::sim::parse_gate_kind(name);
    EXPECT_LT(max_diff(gate_matrix(kind), oracle::by_name(name)), 1e-15) << name;
  }
  // Control (x) target ordering: index 2 * control + target.
  oracle::Mat cnot = oracle::Mat::Zero(4, 4);
  cnot(0, 0) = cnot(1, 1) = cnot(2, 3) = cnot(3, 2) = 1.0;
  EXPECT_LT(max_diff(gate_matrix(GateKind::CNOT), cnot), 1e-15);
}

TEST(GateMatrix, AllUnitary) {
  for (GateKind kind : qce::sim::kAllGateKinds) {
    const auto u = gate_matrix(kind);
    EXPECT_LT(max_diff(u.adjoint() * u, oracle::Mat::Identity(u.rows(), u.cols())), 1e-15);
  }
}

TEST(GateKindNames, RoundTrip) {
  for (GateKind kind : qce::sim::kAllGateKinds) {
    EXPECT_EQ(qce::sim::parse_gate_kind(qce::sim::to_string(kind)), kind);
  }
  EXPECT_FALSE(qce::sim::parse_gate_kind("T").has_value());
  EXPECT_FALSE(qce::sim::parse_gate_kind("cnot").has_value());
}

TEST(GateOp, ValidateRejectsBadTargets) {
  EXPECT_NO_THROW(GateOp::single(GateKind::H, 1).validate(2));
  EXPECT_THROW(GateOp::single(GateKind::H, 2).validate(2), qce::UsageError);
  EXPECT_THROW(GateOp::cnot(1, 1).validate(2), qce::UsageError);
  EXPECT_THROW(GateOp::cnot(0, 3).validate(2), qce::UsageError);
  GateOp wrong_arity{GateKind::X, {0, 1}};
  EXPECT_THROW(wrong_arity.validate(2), qce::UsageError);
}

TEST(Circuit, ValidateAndCountR) {
  Circuit c{2, {GateOp::single(GateKind::R, 0), GateOp::cnot(0, 1), GateOp::single(GateKind::R, 1)}};
  EXPECT_NO_THROW(c.validate());
  EXPECT_EQ(c.r_count(), 2u);
  Circuit too_big{qce::sim::kMaxQubits + 1, {}};
  EXPECT_THROW(too_big.validate(), qce::UsageError);
  Circuit bad{1, {GateOp::cnot(0, 1)}};
  EXPECT_THROW(bad.validate(), qce::UsageError);
}

}  // namespace
