/*
Copyright 2026 The maslov-holonomy Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

  http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

// Serial reference vs OpenMP kernels on the randomized suites.

#include "maslov/batch.hpp"

#include <benchmark/benchmark.h>

using namespace maslov;

namespace {

Exec mode(const benchmark::State& state) { return state.range(0) == 0 ? Exec::Serial : Exec::Parallel; }

void BM_Coboundary(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(coboundary_suite(3, 200, 1, mode(state)));
}

void BM_DeckInvariance(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(deck_invariance_suite(2, 50, 1, mode(state)));
}

void BM_Mod8(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(mod8_suite(50, 1, mode(state)));
}

void BM_Cocycle(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cocycle_suite(50, 1, mode(state)));
}

}  // namespace

BENCHMARK(BM_Coboundary)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DeckInvariance)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Mod8)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Cocycle)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
