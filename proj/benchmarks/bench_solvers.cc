// Copyright 2026 The IRLS Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Micro-benchmarks for the linear-algebra kernels and the decision solvers
// on the random orthogonal-row family.

#include <benchmark/benchmark.h>

#include "irls/instances.h"
#include "irls/l1_solver.h"
#include "irls/linalg.h"
#include "irls/linf_solver.h"

namespace irls {
namespace {

constexpr Index kRows = 150;
constexpr Index kSparsity = 15;

RegressionInstance Family(Index m) {
  return RandomOrthogonalInstance(kRows, m, kSparsity, /*seed=*/1);
}

void BM_Gram(benchmark::State& state) {
  const RegressionInstance instance = Family(state.range(0));
  const Vector weights = Vector::Constant(instance.cols(), 0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(Gram(instance.a, weights));
  }
}
BENCHMARK(BM_Gram)->Arg(200)->Arg(800)->Arg(2000);

void BM_PseudoSolve(benchmark::State& state) {
  const RegressionInstance instance = Family(200);
  LinalgOptions options;
  options.backend = state.range(0) == 0 ? PseudoSolveBackend::kDirect
                                        : PseudoSolveBackend::kConjugateGradient;
  const Matrix gram = Gram(instance.a, Vector::Ones(instance.cols()));
  for (auto _ : state) {
    benchmark::DoNotOptimize(PseudoSolve(gram, instance.b, options));
  }
}
BENCHMARK(BM_PseudoSolve)->Arg(0)->Arg(1);

void BM_LinfDecide(benchmark::State& state) {
  const RegressionInstance instance = Family(200);
  LinfConfig config;
  config.eps = 1.0 / static_cast<double>(state.range(0));
  config.target = 0.55;
  for (auto _ : state) {
    benchmark::DoNotOptimize(LinfDecide(instance.a, instance.b, config));
  }
}
BENCHMARK(BM_LinfDecide)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_L1Decide(benchmark::State& state) {
  const RegressionInstance instance = Family(200);
  L1Config config;
  config.eps = 1.0 / static_cast<double>(state.range(0));
  config.target = 15.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(L1Decide(instance.a, instance.b, config));
  }
}
BENCHMARK(BM_L1Decide)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace irls

BENCHMARK_MAIN();
