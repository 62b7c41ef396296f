// Copyright 2026 The quartic-heat Authors.
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "quartic_heat/finsler.hpp"
#include "quartic_heat/quadrature.hpp"
#include "quartic_heat/symbol.hpp"

namespace {

using namespace qheat;

void BM_Symbol(benchmark::State& state) {
  const Coefficients c = Coefficients::make(1.3, 0.7, 0.9);
  RealVec2 xi{0.3, -1.1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_symbol(c, xi));
    xi[0] += 1e-9;
  }
}
BENCHMARK(BM_Symbol);

void BM_Decomposition(benchmark::State& state) {
  const Coefficients c = Coefficients::normalized(4.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lemma1_decomposition(c, {0.3, -1.1}, {0.8, 0.2}));
  }
}
BENCHMARK(BM_Decomposition);

void BM_DualNorm(benchmark::State& state) {
  const Coefficients c = Coefficients::normalized(1.5);
  for (auto _ : state) benchmark::DoNotOptimize(dual_norm(c, {0.7, 0.3}));
}
BENCHMARK(BM_DualNorm);

void BM_FLambda(benchmark::State& state) {
  const Coefficients c = Coefficients::normalized(4.0);
  const double lambda = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(f_lambda(c, {1.0, 0.0}, lambda).value);
}
BENCHMARK(BM_FLambda)->Arg(8)->Arg(25)->Unit(benchmark::kMillisecond);

void BM_GreenFunction(benchmark::State& state) {
  const Coefficients c = Coefficients::normalized(-0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(green_function(c, {1.0, 1.0}, 1e-3).value);
  }
}
BENCHMARK(BM_GreenFunction)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
