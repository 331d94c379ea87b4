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

#include <benchmark/benchmark.h>

#include "qce/protocol/session.hpp"
#include "qce/random.hpp"
#include "qce/sim/random_circuit.hpp"

namespace {

qce::protocol::SessionConfig make_config(std::size_t n, std::size_t r, qce::protocol::BranchMode mode) {
  qce::Rng rng(7);
  qce::protocol::SessionConfig cfg;
  cfg.circuit = qce::sim::random_circuit({n, 20, r, r}, rng);
  cfg.input = qce::sim::random_state(n, rng);
  cfg.mode = mode;
  return cfg;
}

void BM_SessionSampled(benchmark::State& state) {
  auto cfg = make_config(static_cast<std::size_t>(state.range(0)), 5,
                         qce::protocol::BranchMode::Sampled);
  for (auto _ : state) {
    ++cfg.seed;
    benchmark::DoNotOptimize(qce::protocol::run_session(cfg));
  }
}
BENCHMARK(BM_SessionSampled)->DenseRange(1, 5);

void BM_SessionExact(benchmark::State& state) {
  const auto cfg = make_config(3, static_cast<std::size_t>(state.range(0)),
                               qce::protocol::BranchMode::Exact);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qce::protocol::run_session(cfg));
  }
  state.SetLabel(std::to_string(1 << state.range(0)) + " paths");
}
BENCHMARK(BM_SessionExact)->DenseRange(0, 8, 2);

}  // namespace
