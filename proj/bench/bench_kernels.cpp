/*
 * Copyright 2026 The hypgeo Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Serial reference vs OpenMP kernels. Thread count follows OMP_NUM_THREADS.

#include <vector>

#include <benchmark/benchmark.h>

#include "hypgeo/kernels.hpp"
#include "support/random.hpp"

namespace {

using hypgeo::kernels::PointBatch;

PointBatch batch(std::uint64_t seed, int dim, std::size_t n) {
  hypgeo::testing::Sampler s(seed);
  PointBatch b(dim, n);
  for (std::size_t i = 0; i < n; ++i) b.push_back(s.box(dim, -10, 10));
  return b;
}

template <bool Parallel>
void BM_Distances(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const PointBatch xs = batch(1, 8, n), ys = batch(2, 8, n);
  std::vector<double> out(n);
  for (auto _ : state) {
    if constexpr (Parallel) {
      hypgeo::kernels::parallel::hyperbolic_distances(xs, ys, out);
    } else {
      hypgeo::kernels::serial::hyperbolic_distances(xs, ys, out);
    }
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}

template <bool Parallel>
void BM_Triangles(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const PointBatch xs = batch(3, 3, n), ys = batch(4, 3, n), zs = batch(5, 3, n);
  for (auto _ : state) {
    auto stats = Parallel ? hypgeo::kernels::parallel::triangle_stats(xs, ys, zs)
                          : hypgeo::kernels::serial::triangle_stats(xs, ys, zs);
    benchmark::DoNotOptimize(stats);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}

template <bool Parallel>
void BM_NearestPair(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const PointBatch as = batch(6, 2, n), bs = batch(7, 2, n);
  for (auto _ : state) {
    auto best = Parallel ? hypgeo::kernels::parallel::nearest_pair(as, bs)
                         : hypgeo::kernels::serial::nearest_pair(as, bs);
    benchmark::DoNotOptimize(best);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n * n));
}

BENCHMARK(BM_Distances<false>)->Name("distances/serial")->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(BM_Distances<true>)->Name("distances/omp")->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(BM_Triangles<false>)->Name("triangles/serial")->Arg(100000);
BENCHMARK(BM_Triangles<true>)->Name("triangles/omp")->Arg(100000);
BENCHMARK(BM_NearestPair<false>)->Name("nearest_pair/serial")->Arg(100)->Arg(400);
BENCHMARK(BM_NearestPair<true>)->Name("nearest_pair/omp")->Arg(100)->Arg(400);

}  // namespace

BENCHMARK_MAIN();
