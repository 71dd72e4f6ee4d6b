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

#ifndef SWIPT_MONTECARLO_HPP
#define SWIPT_MONTECARLO_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "swipt/baselines.hpp"
#include "swipt/model.hpp"

namespace swipt {

enum class SweepVariable { PMaxDbm, RelayPosition };

std::string_view sweep_variable_name(SweepVariable v) noexcept;  // "p_max_dbm" / "relay_position"
std::optional<SweepVariable> parse_sweep_variable(std::string_view name) noexcept;

/// Offset between the seeds of consecutive sweep points.
inline constexpr std::uint64_t kPointSeedStride = 1'000'000;

struct RunOptions {
    /// Worker threads; 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
};

/// Per-policy rates of M trials. Trial t (1-based) uses
/// generate_channel(cfg, seed + t); every policy sees that same channel.
struct TrialBatch {
    std::vector<PolicyId> policies;
    std::vector<std::vector<double>> rates;     ///< rates[policy][t - 1]
    std::vector<std::uint64_t> channel_hashes;  ///< hash of the channel of each trial
    std::size_t dead_trials = 0;                ///< trials where no pair could carry rate

    const std::vector<double>& rates_for(PolicyId id) const;
};

TrialBatch run_trials(const SystemConfig& cfg, std::span<const PolicyId> policies, std::size_t trials,
                      std::uint64_t seed, const RunOptions& options = {});

/// FNV-1a over the bit patterns of both gain vectors.
std::uint64_t channel_hash(const ChannelRealization& channel) noexcept;

struct SweepSpec {
    SweepVariable variable = SweepVariable::PMaxDbm;
    std::vector<double> values;
    std::size_t trials = 2000;
    std::uint64_t seed = 1;
    std::vector<PolicyId> policies;
};

/// Throws std::invalid_argument on empty or non-increasing values, zero
/// trials, or an empty policy set.
void validate_sweep(const SweepSpec& spec);

struct SweepRow {
    SweepVariable variable = SweepVariable::PMaxDbm;
    double value = 0.0;
    PolicyId policy = PolicyId::Proposed;
    double mean = 0.0;
    double std_dev = 0.0;  ///< sample standard deviation (M - 1), 0 for M = 1
    std::size_t trials = 0;
    std::uint64_t seed = 0;      ///< base seed of this point: trial t used seed + t
    std::vector<double> samples;  ///< per-trial rates in trial order

    double std_error() const noexcept;
};

struct SweepResult {
    std::vector<SweepRow> rows;  ///< point-major, policies in spec order
    std::size_t dead_trials = 0;

    const SweepRow& at(double value, PolicyId policy) const;
};

/// Point k of the sweep substitutes its value into cfg (relay_position maps
/// to dr = value * d0) and runs trials from seed + k * kPointSeedStride.
SweepResult sweep(const SystemConfig& cfg, const SweepSpec& spec, const RunOptions& options = {});

/// Mean and sample std with a fixed left-to-right summation order.
double ordered_mean(std::span<const double> xs);
double sample_std(std::span<const double> xs);

/// Standard error of mean(a - b) for paired samples (common random numbers).
double paired_standard_error(std::span<const double> a, std::span<const double> b);

/// CSV with columns
///   sweep_variable,sweep_value,policy,mean_rate_bps_hz,std_rate,trials,seed
/// preceded by a "# swipt-relay <version>" line unless `banner` is false.
std::string sweep_to_csv(const SweepResult& result, bool banner);

std::string_view library_version() noexcept;

}  // namespace swipt

#endif  // SWIPT_MONTECARLO_HPP
