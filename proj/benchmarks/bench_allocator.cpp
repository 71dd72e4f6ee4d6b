// SPDX-License-Identifier: Apache-2.0
//
// swipt-relay: resource allocation for energy-harvesting OFDM relays
// Copyright (C) 2026 The swipt-relay Authors
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
// ------------------------------------------------------------------------

#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>
#include <vector>

#include "swipt/allocator.hpp"
#include "swipt/channel.hpp"
#include "swipt/oracle.hpp"

namespace {

using namespace swipt;

SystemConfig with_n(std::size_t n) {
    SystemConfig cfg = default_config();
    cfg.n_subcarriers = n;
    cfg.taps = std::min<std::size_t>(cfg.taps, n);
    return cfg;
}

void BM_Solve(benchmark::State& state) {
    const SystemConfig cfg = with_n(static_cast<std::size_t>(state.range(0)));
    const ChannelRealization ch = generate_channel(cfg, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve(ch, cfg).total_rate);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Solve)->RangeMultiplier(4)->Range(4, 1024)->Complexity();

void BM_Waterfill(benchmark::State& state) {
    std::mt19937_64 rng(3);
    std::exponential_distribution<double> gain(1.0);
    std::vector<double> gammas(static_cast<std::size_t>(state.range(0)));
    for (auto& g : gammas) g = gain(rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(waterfill(gammas, 1000.0));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Waterfill)->RangeMultiplier(4)->Range(4, 1024)->Complexity();

void BM_OptimalRho(benchmark::State& state) {
    const NoiseProfile noise = default_config().noise;
    double b = 0.5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(optimal_rho_for_b(b, noise));
        b = b < 1e3 ? b * 1.01 : 0.5;
    }
}
BENCHMARK(BM_OptimalRho);

void BM_BestPairingExhaustive(benchmark::State& state) {
    const SystemConfig cfg = with_n(static_cast<std::size_t>(state.range(0)));
    const ChannelRealization ch = generate_channel(cfg, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(oracle::best_pairing_exhaustive(ch, cfg).rate);
    }
}
BENCHMARK(BM_BestPairingExhaustive)->DenseRange(2, 8, 2)->Unit(benchmark::kMicrosecond);

}  // namespace
