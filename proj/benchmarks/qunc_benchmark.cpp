// Copyright 2026 The qunc Authors
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

#include "qunc/entropy.hpp"
#include "qunc/haar.hpp"
#include "qunc/totalinfo.hpp"

namespace {

using namespace qunc;

DensityOperator bench_density(std::size_t n) {
  Rng rng = make_stream(RngSeed{1});
  const Matrix u = sample_haar_unitary(n, rng);
  Eigen::VectorXd d = Eigen::VectorXd::LinSpaced(static_cast<Eigen::Index>(n), 1.0, 2.0);
  d /= d.sum();
  return DensityOperator(u * d.cast<Complex>().asDiagonal() * u.adjoint());
}

void BM_SampleHaarUnitary(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng = make_stream(RngSeed{0});
  for (auto _ : state) benchmark::DoNotOptimize(sample_haar_unitary(n, rng));
}
BENCHMARK(BM_SampleHaarUnitary)->Arg(2)->Arg(4)->Arg(8)->Arg(16)->Arg(64);

void BM_VonNeumann(benchmark::State& state) {
  const auto rho = bench_density(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(von_neumann(rho));
}
BENCHMARK(BM_VonNeumann)->Arg(4)->Arg(16)->Arg(64);

void BM_DensityValidation(benchmark::State& state) {
  const Matrix m = bench_density(static_cast<std::size_t>(state.range(0))).matrix();
  for (auto _ : state) benchmark::DoNotOptimize(DensityOperator(m));
}
BENCHMARK(BM_DensityValidation)->Arg(4)->Arg(16)->Arg(64);

void BM_BuildMub(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_mub(n));
}
BENCHMARK(BM_BuildMub)->Arg(3)->Arg(13)->Arg(31);

void BM_CheckReconstruction(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto mubs = build_mub(n);
  const auto rho = bench_density(n);
  for (auto _ : state) benchmark::DoNotOptimize(check_reconstruction(rho, mubs));
}
BENCHMARK(BM_CheckReconstruction)->Arg(5)->Arg(13);

void BM_EstimateAvgInfo(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto rho = bench_density(n);
  SamplingOptions opts;
  opts.samples = 10000;
  opts.workers = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(estimate_avg_info(rho, ObservableBasis::computational(n), opts));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(opts.samples));
}
BENCHMARK(BM_EstimateAvgInfo)->Args({3, 1})->Args({5, 1})->Args({5, 4})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
