// Copyright 2026 The measchain Authors
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

#include <random>

#include "measchain/chain.h"
#include "measchain/discriminator.h"
#include "measchain/layout.h"
#include "measchain/sampler.h"
#include "measchain/spectral.h"

namespace {

using namespace measchain;

ComplexMatrix random_hermitian(std::size_t dim, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> n;
    ComplexMatrix a(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            a(i, j) = Complex(n(rng), n(rng));
        }
    }
    return (a + a.adjoint()) * Complex(0.5);
}

void BM_EigHermitian(benchmark::State &state) {
    const auto h = random_hermitian(static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(eig_hermitian(h));
    }
}
BENCHMARK(BM_EigHermitian)->RangeMultiplier(2)->Range(8, 256);

void BM_ReducedDensity(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    auto ms = chain_pure(0.6, Complex(0, 0.8));
    const auto big = decohere(ms, n, 0.5).state;
    const std::vector<std::string> keep{kObject, kDetector, kObserver};
    for (auto _ : state) {
        benchmark::DoNotOptimize(reduced_density(big.vector(), big.layout(), keep));
    }
}
BENCHMARK(BM_ReducedDensity)->DenseRange(0, 9, 3);

void BM_PartialTraceDensity(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto big = decohere(chain_pure(0.6, 0.8), n, 0.5).state;
    const auto rho = big.density();
    const std::vector<std::string> keep{kObserver};
    for (auto _ : state) {
        benchmark::DoNotOptimize(partial_trace(rho, big.layout(), keep));
    }
}
BENCHMARK(BM_PartialTraceDensity)->DenseRange(0, 5, 1);

void BM_RunTrials(benchmark::State &state) {
    Scenario sc;
    sc.a1 = std::sqrt(0.3);
    sc.a2 = std::sqrt(0.7);
    sc.trials = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_trials(sc, 1));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RunTrials)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);

void BM_CheckDiscrimination(benchmark::State &state) {
    const auto p = superposition_problem(std::sqrt(0.3), std::sqrt(0.7));
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_eigen_discrimination(p));
    }
}
BENCHMARK(BM_CheckDiscrimination);

void BM_FeasibilityOracle(benchmark::State &state) {
    const auto p = superposition_problem(std::sqrt(0.3), std::sqrt(0.7));
    const std::vector<double> grid{-1.5, -1.0, -0.5, 0.0, 0.5, 1.0, 1.5};
    for (auto _ : state) {
        benchmark::DoNotOptimize(numeric_feasibility_oracle(p, grid));
    }
}
BENCHMARK(BM_FeasibilityOracle);

}  // namespace

BENCHMARK_MAIN();
