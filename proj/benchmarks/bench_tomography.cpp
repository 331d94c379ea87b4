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
#include "qce/tomography/channels.hpp"
#include "qce/tomography/plan.hpp"
#include "qce/tomography/reconstruct.hpp"

namespace {

using qce::sim::GateKind;
namespace tomo = qce::tomography;

GateKind gate_of(std::int64_t i) { return qce::sim::kAllGateKinds[static_cast<std::size_t>(i)]; }

void BM_CollectDecrypted(benchmark::State& state) {
  const GateKind g = gate_of(state.range(0));
  const auto plan = tomo::TomographyPlan::standard(qce::sim::arity(g));
  const auto ch = tomo::channel_of_gate_decrypted(g);
  qce::Rng rng(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tomo::collect(ch, plan, rng));
  }
  state.SetLabel(std::string(qce::sim::to_string(g)));
}
BENCHMARK(BM_CollectDecrypted)->Arg(2)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_ReconstructExact(benchmark::State& state) {
  const GateKind g = gate_of(state.range(0));
  const auto plan = tomo::TomographyPlan::standard(qce::sim::arity(g));
  qce::Rng rng(2);
  const auto counts = tomo::collect(tomo::channel_of_gate_decrypted(g), plan, rng);
  const tomo::ProcessReconstructor rec(plan);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rec.reconstruct(counts));
  }
  state.SetLabel(std::string(qce::sim::to_string(g)));
}
BENCHMARK(BM_ReconstructExact)->Arg(2)->Arg(5)->Unit(benchmark::kMicrosecond);

void BM_ReconstructSampled(benchmark::State& state) {
  const GateKind g = gate_of(state.range(0));
  const auto plan = tomo::TomographyPlan::standard(qce::sim::arity(g), 10000);
  qce::Rng rng(3);
  const auto counts = tomo::collect(tomo::channel_of_gate_decrypted(g), plan, rng);
  const tomo::ProcessReconstructor rec(plan);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rec.reconstruct(counts));
  }
  state.SetLabel(std::string(qce::sim::to_string(g)));
}
BENCHMARK(BM_ReconstructSampled)->Arg(2)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_PlanSetup(benchmark::State& state) {
  const auto plan = tomo::TomographyPlan::standard(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(tomo::ProcessReconstructor(plan));
  }
}
BENCHMARK(BM_PlanSetup)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace
