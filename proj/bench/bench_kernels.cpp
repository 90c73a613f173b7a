// Copyright 2026 The qcb Authors
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

// Serial reference vs OpenMP kernels, plus a whole fuzz campaign both ways.
//   ./bench_kernels --benchmark_filter=Matmul

#include <benchmark/benchmark.h>

#include "qcb/fuzz.hpp"
#include "qcb/kernels.hpp"
#include "qcb/linalg.hpp"
#include "qcb/rng.hpp"

namespace {

using qcb::ComplexMatrix;
namespace kernels = qcb::kernels;

ComplexMatrix random_matrix(std::size_t n, uint64_t seed) {
    qcb::Rng rng(seed);
    return qcb::ginibre(n, n, rng);
}

template <ComplexMatrix (*F)(const ComplexMatrix&, const ComplexMatrix&)>
void BM_Matmul(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    ComplexMatrix a = random_matrix(n, 1);
    ComplexMatrix b = random_matrix(n, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(F(a, b));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Matmul<kernels::serial::matmul>)->Name("Matmul/serial")->RangeMultiplier(2)->Range(32, 256);
BENCHMARK(BM_Matmul<kernels::parallel::matmul>)->Name("Matmul/parallel")->RangeMultiplier(2)->Range(32, 256);

template <ComplexMatrix (*F)(const ComplexMatrix&, const ComplexMatrix&)>
void BM_Kron(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    ComplexMatrix a = random_matrix(n, 3);
    ComplexMatrix b = random_matrix(16, 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(F(a, b));
    }
}
BENCHMARK(BM_Kron<kernels::serial::kron>)->Name("Kron/serial")->RangeMultiplier(2)->Range(8, 64);
BENCHMARK(BM_Kron<kernels::parallel::kron>)->Name("Kron/parallel")->RangeMultiplier(2)->Range(8, 64);

template <ComplexMatrix (*F)(const ComplexMatrix&, const kernels::TracePlan&)>
void BM_PartialTrace(benchmark::State& state) {
    // n qubits, keep the first half.
    const auto n = static_cast<std::size_t>(state.range(0));
    std::vector<std::size_t> dims(n, 2);
    std::vector<bool> keep(n, false);
    for (std::size_t i = 0; i < n / 2; ++i) {
        keep[i] = true;
    }
    kernels::TracePlan plan = kernels::make_trace_plan(dims, keep);
    ComplexMatrix m = random_matrix(std::size_t{1} << n, 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(F(m, plan));
    }
}
BENCHMARK(BM_PartialTrace<kernels::serial::partial_trace>)->Name("PartialTrace/serial")->DenseRange(6, 10, 2);
BENCHMARK(BM_PartialTrace<kernels::parallel::partial_trace>)->Name("PartialTrace/parallel")->DenseRange(6, 10, 2);

void BM_Campaign(benchmark::State& state) {
    qcb::CampaignConfig cfg;
    cfg.bound = "prop1";
    cfg.trials = 64;
    cfg.seed = 11;
    const bool parallel = state.range(0) != 0;
    for (auto _ : state) {
        auto res = parallel ? qcb::run_campaign(cfg) : qcb::run_campaign_serial(cfg);
        benchmark::DoNotOptimize(res.violations);
    }
    state.SetLabel(parallel ? "parallel" : "serial");
}
BENCHMARK(BM_Campaign)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
