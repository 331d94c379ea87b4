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
#include <optional>

#include "oracle.hpp"
#include "qce/error.hpp"
#include "qce/protocol/server_ops.hpp"
#include "qce/qotp/key_update.hpp"
#include "qce/qotp/pad.hpp"
#include "qce/random.hpp"
#include "qce/sim/density_matrix.hpp"

namespace {

using qce::qotp::AuxSecret;
using qce::qotp::EncKey;
using qce::sim::GateKind;
using qce::sim::GateOp;
using qce::sim::PureState;

/// Key k' with G X^a Z^b = X^a' Z^b' G up to phase, found by search.
std::optional<EncKey> commuted_key(const oracle::Mat& g, EncKey k) {
  for (const EncKey cand : qce::qotp::kAllKeys) {
    if (oracle::ray_distance(g * oracle::pad(k.a, k.b), oracle::pad(cand.a, cand.b) * g) < 1e-12) {
      return cand;
    }
  }
  return std::nullopt;
}

std::optional<std::pair<EncKey, EncKey>> commuted_cnot(EncKey kc, EncKey kt) {
  const oracle::Mat g = oracle::cnot(0, 1, 2);
  const oracle::Mat in = oracle::kron(oracle::pad(kt.a, kt.b), oracle::pad(kc.a, kc.b));
  for (const EncKey c : qce::qotp::kAllKeys) {
    for (const EncKey t : qce::qotp::kAllKeys) {
      const oracle::Mat out = oracle::kron(oracle::pad(t.a, t.b), oracle::pad(c.a, c.b));
      if (oracle::ray_distance(g * in, out * g) < 1e-12) {
        return std::pair{c, t};
      }
    }
  }
  return std::nullopt;
}

TEST(Encrypt, Examples) {
  EXPECT_NEAR(state_fidelity(qce::qotp::encrypt(PureState::zero(), 0, {true, false}),
                             PureState::one()),
              1.0, 1e-15);
  EXPECT_NEAR(state_fidelity(qce::qotp::encrypt(PureState::plus(), 0, {false, true}),
                             PureState::minus()),
              1.0, 1e-15);
  EXPECT_THROW(qce::qotp::encrypt(PureState(1), 1, {true, true}), qce::UsageError);
}

TEST(Encrypt, AppliesZThenX) {
  qce::Rng rng(1);
  const PureState psi = qce::sim::random_state(1, rng);
  const oracle::Vec want = oracle::X() * oracle::Z() * psi.amplitudes();
  const PureState got = qce::qotp::encrypt(psi, 0, {true, true});
  // Exact amplitudes, not just up to phase: the order is fixed.
  EXPECT_LT((got.amplitudes() - want).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Encrypt, DecryptRoundTrip) {
  qce::Rng rng(2);
  for (int i = 0; i < 25; ++i) {
    const PureState psi = qce::sim::random_state(2, rng);
    for (const EncKey k : qce::qotp::kAllKeys) {
      const PureState back = qce::qotp::decrypt(qce::qotp::encrypt(psi, 1, k), 1, k);
      EXPECT_NEAR(state_fidelity(back, psi), 1.0, 1e-12);
    }
  }
}

TEST(AverageOverKeys, GivesMaximallyMixed) {
  const auto half = qce::sim::DensityMatrix::maximally_mixed(1);
  EXPECT_LT(trace_distance(qce::qotp::average_over_keys(PureState::zero(), 0), half), 1e-15);
  EXPECT_LT(trace_distance(qce::qotp::average_over_keys(PureState::plus_y(), 0), half), 1e-15);
}

TEST(AverageOverKeys, ReducedStateOfEntangledInput) {
  qce::Rng rng(3);
  const auto half = qce::sim::DensityMatrix::maximally_mixed(1);
  const std::array<std::size_t, 1> keep = {0};
  for (int i = 0; i < 100; ++i) {
    const PureState psi = qce::sim::random_state(2, rng);
    const auto avg = qce::qotp::average_over_keys(psi, 0);
    EXPECT_LT(trace_distance(partial_trace_keep(avg, keep), half), 1e-12);
  }
}

TEST(AverageOverKeys, AllKeysGiveFullyMixedRegister) {
  qce::Rng rng(4);
  const PureState psi = qce::sim::random_state(3, rng);
  EXPECT_LT(trace_distance(qce::qotp::average_over_all_keys(psi),
                           qce::sim::DensityMatrix::maximally_mixed(3)),
            1e-12);
}

TEST(UpdateClifford, SpecExamples) {
  EXPECT_EQ(qce::qotp::update_clifford(GateKind::H, {true, false}), (EncKey{false, true}));
  EXPECT_EQ(qce::qotp::update_clifford(GateKind::P, {true, true}), (EncKey{true, false}));
  const auto [c, t] = qce::qotp::update_cnot({true, false}, {false, true});
  EXPECT_EQ(c, (EncKey{true, true}));
  EXPECT_EQ(t, (EncKey{true, true}));
}

TEST(UpdateClifford, RejectsNonSingleCliffords) {
  EXPECT_THROW(qce::qotp::update_clifford(GateKind::R, {}), qce::UsageError);
  EXPECT_THROW(qce::qotp::update_clifford(GateKind::CNOT, {}), qce::UsageError);
}

TEST(UpdateClifford, MatchesCommutationOracleForAllKeys) {
  for (const char* name : {"X", "Z", "H", "P"}) {
    const GateKind g = *qce::sim::parse_gate_kind(name);
    for (const EncKey k : qce::qotp::kAllKeys) {
      const auto want = commuted_key(oracle::by_name(name), k);
      ASSERT_TRUE(want.has_value());
      EXPECT_EQ(qce::qotp::update_clifford(g, k), *want) << name;
    }
  }
}

TEST(UpdateCnot, MatchesCommutationOracleForAllKeys) {
  for (const EncKey kc : qce::qotp::kAllKeys) {
    for (const EncKey kt : qce::qotp::kAllKeys) {
      const auto want = commuted_cnot(kc, kt);
      ASSERT_TRUE(want.has_value());
      EXPECT_EQ(qce::qotp::update_cnot(kc, kt), *want);
    }
  }
}

TEST(UpdateR, SpecExamples) {
  EXPECT_EQ(qce::qotp::update_r({false, false}, false, {false, false}), (EncKey{false, false}));
  EXPECT_EQ(qce::qotp::update_r({true, false}, true, {false, false}), (EncKey{false, false}));
  EXPECT_EQ(qce::qotp::update_r({true, true}, false, {true, true}), (EncKey{true, true}));
}

TEST(UpdateR, ExhaustiveFormula) {
  for (int bits = 0; bits < 32; ++bits) {
    const bool a = bits & 1, b = bits & 2, c = bits & 4, y = bits & 8, d = bits & 16;
    const EncKey got = qce::qotp::update_r({a, b}, c, {y, d});
    EXPECT_EQ(got.a, a ^ c);
    EXPECT_EQ(got.b, (a && (c ^ y ^ true)) ^ b ^ d ^ y);
  }
}

TEST(CorrectionBit, Examples) {
  EXPECT_FALSE(qce::qotp::correction_bit({false, false}, {false, false}));
  EXPECT_TRUE(qce::qotp::correction_bit({true, false}, {false, false}));
  EXPECT_FALSE(qce::qotp::correction_bit({true, false}, {true, false}));
}

TEST(CorrectionBit, UniformGivenEitherA) {
  for (bool a : {false, true}) {
    int ones = 0;
    for (const AuxSecret s : qce::qotp::kAllAuxSecrets) {
      ones += qce::qotp::correction_bit({a, false}, s) ? 1 : 0;
    }
    EXPECT_EQ(ones, 2);
  }
}

TEST(AuxState, EquatorStates) {
  EXPECT_NEAR(state_fidelity(qce::qotp::aux_state({false, false}), PureState::plus()), 1.0, 1e-15);
  EXPECT_NEAR(state_fidelity(qce::qotp::aux_state({false, true}), PureState::minus()), 1.0, 1e-15);
  EXPECT_NEAR(state_fidelity(qce::qotp::aux_state({true, false}), PureState::plus_y()), 1.0, 1e-15);
  EXPECT_NEAR(state_fidelity(qce::qotp::aux_state({true, true}), PureState::minus_y()), 1.0, 1e-15);
}

TEST(CliffordSoundness, RandomInputsAllKeys) {
  qce::Rng rng(5);
  for (GateKind g : {GateKind::X, GateKind::Z, GateKind::H, GateKind::P}) {
    const GateOp op = GateOp::single(g, 0);
    for (const EncKey k : qce::qotp::kAllKeys) {
      for (int i = 0; i < 100; ++i) {
        const PureState psi = qce::sim::random_state(1, rng);
        const PureState out = apply_gate(qce::qotp::encrypt(psi, 0, k), op);
        const PureState dec = qce::qotp::decrypt(out, 0, qce::qotp::update_clifford(g, k));
        ASSERT_GE(state_fidelity(dec, apply_gate(psi, op)), 1 - 1e-12);
      }
    }
  }
}

TEST(RGadgetSoundness, AllBranchCombinations) {
  qce::Rng rng(6);
  int combos = 0;
  for (const EncKey k : qce::qotp::kAllKeys) {
    for (const AuxSecret s : qce::qotp::kAllAuxSecrets) {
      for (bool c : {false, true}) {
        ++combos;
        for (int i = 0; i < 20; ++i) {
          const PureState psi = qce::sim::random_state(1, rng);
          const PureState reg =
              qce::sim::tensor(qce::qotp::aux_state(s), qce::qotp::encrypt(psi, 0, k));
          auto m = qce::protocol::server_execute_r(reg, 0, 1, qce::sim::BranchSource::forced(c));
          ASSERT_NEAR(m.probability, 0.5, 1e-12);
          const PureState corrected =
              qce::protocol::apply_correction(m.reg, 1, qce::qotp::correction_bit(k, s));
          const PureState aux = qce::sim::remove_qubit(corrected, 0, c);
          const oracle::Vec want = oracle::R() * psi.amplitudes();
          const PureState dec = qce::qotp::decrypt(aux, 0, qce::qotp::update_r(k, c, s));
          ASSERT_GE(oracle::fidelity(dec.amplitudes(), want), 1 - 1e-12);
        }
      }
    }
  }
  EXPECT_EQ(combos, 32);
}

TEST(KeyRegister, RandomIsSeeded) {
  qce::Rng a(9), b(9);
  EXPECT_EQ(qce::qotp::KeyRegister::random(5, a), qce::qotp::KeyRegister::random(5, b));
  qce::qotp::KeyRegister reg(2);
  EXPECT_THROW(reg[2], std::out_of_range);
}

}  // namespace
