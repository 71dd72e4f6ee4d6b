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

#include <vector>

#include "swipt/channel.hpp"
#include "swipt/montecarlo.hpp"

namespace {

using namespace swipt;

void BM_GenerateChannel(benchmark::State& state) {
    SystemConfig cfg = default_config();
    cfg.n_subcarriers = static_cast<std::size_t>(state.range(0));
    std::uint64_t seed = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(generate_channel(cfg, seed++));
    }
}
BENCHMARK(BM_GenerateChannel)->RangeMultiplier(4)->Range(4, 256);

void BM_RunTrials(benchmark::State& state) {
    const SystemConfig cfg = default_config();
    const std::vector<PolicyId> policies(kAllPolicies.begin(), kAllPolicies.end());
    const RunOptions options{static_cast<unsigned>(state.range(0))};
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_trials(cfg, policies, 2000, 1, options));
    }
}
BENCHMARK(BM_RunTrials)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
