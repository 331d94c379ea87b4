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

#include "qce/random.hpp"
#include "qce/sim/pure_state.hpp"

namespace {

void BM_ApplySingle(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  qce::Rng rng(1);
  qce::sim::PureState s = qce::sim::random_state(n, rng);
  const auto op = qce::sim::GateOp::single(qce::sim::GateKind::H, n / 2);
  for (auto _ : state) {
    s.apply(op);
    benchmark::DoNotOptimize(s.amplitudes().data());
  }
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_ApplySingle)->DenseRange(2, 12, 2);

void BM_ApplyCnot(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  qce::Rng rng(2);
  qce::sim::PureState s = qce::sim::random_state(n, rng);
  const auto op = qce::sim::GateOp::cnot(0, n - 1);
  for (auto _ : state) {
    s.apply(op);
    benchmark::DoNotOptimize(s.amplitudes().data());
  }
}
BENCHMARK(BM_ApplyCnot)->DenseRange(2, 12, 2);

void BM_MeasureZ(benchmark::State& state) {
  qce::Rng rng(3);
  const qce::sim::PureState s = qce::sim::random_state(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(measure_z(s, 0, qce::sim::BranchSource::sample(rng)));
  }
}
BENCHMARK(BM_MeasureZ)->Arg(4)->Arg(10);

}  // namespace
