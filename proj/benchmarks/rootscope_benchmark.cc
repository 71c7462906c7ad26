// Copyright 2026 The Rootscope Authors.
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

#include "rootscope/core_eval.h"
#include "rootscope/lambert_w.h"
#include "rootscope/solvers.h"

namespace rootscope {
namespace {

void BM_SolveAllRoots(benchmark::State& state) {
  const ProblemInstance inst(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(SolveAllRoots(inst));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SolveAllRoots)
    ->RangeMultiplier(4)
    ->Range(4, 4096)
    ->Unit(benchmark::kMicrosecond)
    ->Complexity();

void BM_SolvePositiveRoot(benchmark::State& state) {
  const ProblemInstance inst(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(SolvePositiveRoot(inst));
  }
}
BENCHMARK(BM_SolvePositiveRoot)->Arg(10)->Arg(1000)->Arg(1000000);

void BM_SmallNOracle(benchmark::State& state) {
  const ProblemInstance inst(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(SmallNOracle(inst));
  }
}
BENCHMARK(BM_SmallNOracle)->Arg(5)->Arg(25);

void BM_LambertW0(benchmark::State& state) {
  double x = 1e-3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(LambertW0(x));
    x = x < 1e9 ? x * 1.37 : 1e-3;
  }
}
BENCHMARK(BM_LambertW0);

void BM_EvalF(benchmark::State& state) {
  const ProblemInstance inst(static_cast<int>(state.range(0)));
  const ComplexValue z(-0.49, 0.87);
  for (auto _ : state) {
    benchmark::DoNotOptimize(EvalF(inst, z));
  }
}
BENCHMARK(BM_EvalF)->Arg(10)->Arg(1000);

void BM_ScaledResidual(benchmark::State& state) {
  const ProblemInstance inst(static_cast<int>(state.range(0)));
  const ComplexValue z(-0.49, 0.87);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ScaledResidual(inst, z));
  }
}
BENCHMARK(BM_ScaledResidual)->Arg(10)->Arg(100000);

}  // namespace
}  // namespace rootscope

BENCHMARK_MAIN();
