// Copyright 2026 The Authors.
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

#include <random>

#include <benchmark/benchmark.h>

#include "mbw/betti.h"
#include "mbw/finite_field.h"
#include "mbw/matroid.h"
#include "mbw/simplicial_complex.h"
#include "mbw/weights.h"

namespace mbw {
namespace {

// Dense random r x n matrix over GF(p); fixed seed per shape.
Matroid RandomMatroid(std::int64_t p, int r, int n) {
  std::mt19937 rng(static_cast<std::uint32_t>(1000 * r + n));
  std::uniform_int_distribution<std::int64_t> entry(0, p - 1);
  FieldMatrix h(PrimeField(p), r, n);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < n; ++j) h.set(i, j, entry(rng));
  }
  return Matroid::FromMatrix(h);
}

void BM_RankSweep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    // A fresh matroid each iteration so the memo starts cold.
    const Matroid m = RandomMatroid(3, n / 2, n);
    int total = 0;
    for (Subset s = 0; s <= m.ground_set(); ++s) total += m.Rank(s);
    benchmark::DoNotOptimize(total);
  }
  state.SetComplexityN(std::int64_t{1} << n);
}
BENCHMARK(BM_RankSweep)->DenseRange(8, 16, 4)->Complexity(benchmark::oN);

void BM_BettiFastPath(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const Matroid m = RandomMatroid(2, n / 2, n);
    benchmark::DoNotOptimize(BettiFineMatroid(m));
  }
}
BENCHMARK(BM_BettiFastPath)->DenseRange(8, 18, 2);

void BM_BettiHochster(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Matroid m = RandomMatroid(2, n / 2, n);
  const SimplicialComplex delta = IndependenceComplex(m);
  const PrimeField f2(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(BettiFineHochster(delta, f2));
  }
}
BENCHMARK(BM_BettiHochster)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

void BM_Circuits(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const Matroid m = RandomMatroid(5, n / 2, n);
    benchmark::DoNotOptimize(Circuits(m));
  }
}
BENCHMARK(BM_Circuits)->DenseRange(8, 16, 4);

void BM_WeightsFromBetti(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Matroid m = RandomMatroid(2, n / 2, n);
  const BettiTable table = BettiFineMatroid(m);
  for (auto _ : state) {
    benchmark::DoNotOptimize(WeightsFromBetti(table, n - m.rank()));
  }
}
BENCHMARK(BM_WeightsFromBetti)->DenseRange(8, 16, 4);

void BM_WeightsBruteForce(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const Matroid m = RandomMatroid(2, n / 2, n);
    benchmark::DoNotOptimize(WeightsBruteForce(m));
  }
}
BENCHMARK(BM_WeightsBruteForce)->DenseRange(8, 16, 4);

void BM_Whitney(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Matroid m = RandomMatroid(3, n / 2, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ComputeWhitneyPolynomial(m));
  }
}
BENCHMARK(BM_Whitney)->DenseRange(8, 16, 4);

}  // namespace
}  // namespace mbw

BENCHMARK_MAIN();
