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

#include <cmath>
#include <set>

#include "qce/random.hpp"

namespace {

TEST(Rng, SameSeedSameStream) {
  qce::Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) {
    ASSERT_EQ(a(), b());
  }
}

TEST(Rng, UniformInUnitInterval) {
  qce::Rng rng(1);
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

TEST(Rng, BitsAreBalanced) {
  qce::Rng rng(3);
  int ones = 0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    ones += rng.bit() ? 1 : 0;
  }
  // 5 sigma of a fair binomial.
  EXPECT_NEAR(ones, n / 2, 5 * std::sqrt(n / 4.0));
}

TEST(Rng, DeriveIsPureAndDistinct) {
  const qce::Rng base(7);
  qce::Rng s1 = base.derive(1), s1b = base.derive(1), s2 = base.derive(2);
  EXPECT_EQ(s1(), s1b());
  std::set<std::uint64_t> firsts;
  for (std::uint64_t k = 0; k < 64; ++k) {
    firsts.insert(base.derive(k)());
  }
  EXPECT_EQ(firsts.size(), 64u);
  EXPECT_NE(base.derive(1)(), s2());
}

class PoissonMoments : public ::testing::TestWithParam<double> {};

TEST_P(PoissonMoments, MeanAndVarianceMatch) {
  const double mean = GetParam();
  qce::Rng rng(11);
  const int n = 40000;
  double sum = 0.0, sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = static_cast<double>(rng.poisson(mean));
    sum += x;
    sq += x * x;
  }
  const double m = sum / n;
  const double var = sq / n - m * m;
  EXPECT_NEAR(m, mean, 5 * std::sqrt(mean / n) + 1e-12);
  EXPECT_NEAR(var, mean, 0.05 * mean + 1e-12);
}

INSTANTIATE_TEST_SUITE_P(Means, PoissonMoments, ::testing::Values(0.5, 4.0, 29.0, 31.0, 1e4));

TEST(Rng, PoissonOfZeroIsZero) {
  qce::Rng rng(0);
  for (int i = 0; i < 100; ++i) {
    EXPECT_EQ(rng.poisson(0.0), 0u);
  }
}

TEST(Rng, NormalMoments) {
  qce::Rng rng(5);
  const int n = 50000;
  double sum = 0.0, sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = rng.normal();
    sum += x;
    sq += x * x;
  }
  EXPECT_NEAR(sum / n, 0.0, 0.03);
  EXPECT_NEAR(sq / n, 1.0, 0.03);
}

}  // namespace
