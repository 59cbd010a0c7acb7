// Copyright 2026 The qdeform Authors
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

#include <benchmark/benchmark.h>

#include "qdeform/coherent_states.hpp"
#include "qdeform/entanglement.hpp"
#include "qdeform/sweep.hpp"

namespace {

using qdeform::Complex;
using qdeform::Deformation;

void BM_MatrixExponential(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  const qdeform::FockOperator b = qdeform::deformed_annihilator(Deformation(0.1), dim);
  const Complex alpha(1.0, 0.5);
  const qdeform::FockOperator gen = alpha * b.adjoint() - std::conj(alpha) * b;
  for (auto _ : state) benchmark::DoNotOptimize(qdeform::matrix_exponential(gen));
}
BENCHMARK(BM_MatrixExponential)->RangeMultiplier(2)->Range(32, 256)->Unit(benchmark::kMicrosecond);

void BM_DcsNumeric(benchmark::State& state) {
  const qdeform::DeformedStateSpec spec{1.0, Deformation(0.1), 64, qdeform::Method::numeric};
  for (auto _ : state) benchmark::DoNotOptimize(qdeform::dcs_numeric(spec));
}
BENCHMARK(BM_DcsNumeric)->Unit(benchmark::kMicrosecond);

void BM_DcsPerturbative(benchmark::State& state) {
  const qdeform::DeformedStateSpec spec{1.0, Deformation(0.1), 64, qdeform::Method::perturbative};
  for (auto _ : state) benchmark::DoNotOptimize(qdeform::dcs_perturbative(spec));
}
BENCHMARK(BM_DcsPerturbative);

void BM_FockOracle(benchmark::State& state) {
  const auto spec = qdeform::psi2_spec(1.0, 0.5, Deformation(0.1));
  for (auto _ : state) benchmark::DoNotOptimize(qdeform::concurrence_fock_oracle(spec, 64));
}
BENCHMARK(BM_FockOracle)->Unit(benchmark::kMicrosecond);

void BM_RegionScan(benchmark::State& state) {
  qdeform::SweepSpec spec = qdeform::default_region_scan();
  spec.threads = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qdeform::run_region_scan(spec));
}
BENCHMARK(BM_RegionScan)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
