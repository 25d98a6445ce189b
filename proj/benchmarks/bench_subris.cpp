// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "subris/subris.hpp"

namespace {

subris::ValidatedConfig square(int side, int L0, int M) {
    subris::SystemConfig c;
    c.M = M;
    c.Nx = c.Ny = side;
    c.Lx = c.Ly = L0;
    return subris::validate_config(c);
}

void BM_LosArrayGain(benchmark::State& state) {
    const auto cfg = square(static_cast<int>(state.range(0)), 2, 64);
    const auto phases = subris::optimal_phases(cfg);
    for (auto _ : state) {
        benchmark::DoNotOptimize(subris::los_array_gain(cfg, phases));
    }
}
BENCHMARK(BM_LosArrayGain)->Arg(8)->Arg(32);

void BM_SampleChannels(benchmark::State& state) {
    const auto cfg = square(static_cast<int>(state.range(0)), 2, 64);
    const subris::ChannelSampler sampler(cfg);
    std::uint64_t i = 0;
    for (auto _ : state) {
        subris::SampleStream stream(subris::derive_seed(1, i++));
        benchmark::DoNotOptimize(sampler.sample(stream));
    }
}
BENCHMARK(BM_SampleChannels)->Arg(8)->Arg(32)->Unit(benchmark::kMicrosecond);

void BM_EffectiveCascade(benchmark::State& state) {
    const auto cfg = square(static_cast<int>(state.range(0)), 2, 64);
    const auto phases = subris::optimal_phases(cfg);
    subris::SampleStream stream(7);
    const auto ch = subris::sample_channels(cfg, stream);
    for (auto _ : state) {
        benchmark::DoNotOptimize(subris::effective_cascade(cfg, phases, ch.h2, ch.H1));
    }
}
BENCHMARK(BM_EffectiveCascade)->Arg(8)->Arg(32)->Unit(benchmark::kMicrosecond);

void BM_MonteCarloSe(benchmark::State& state) {
    const auto cfg = square(static_cast<int>(state.range(0)), 2, 64);
    const auto phases = subris::optimal_phases(cfg);
    for (auto _ : state) {
        benchmark::DoNotOptimize(subris::monte_carlo_se(cfg, phases, 100, 1, 1));
    }
    state.SetItemsProcessed(state.iterations() * 100);
}
BENCHMARK(BM_MonteCarloSe)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
