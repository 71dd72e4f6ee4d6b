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

#include "swipt/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <thread>

#include <fmt/format.h>

#include "swipt/channel.hpp"

#ifndef SWIPT_VERSION
#define SWIPT_VERSION "0.0.0"
#endif

namespace swipt {

std::string_view library_version() noexcept { return SWIPT_VERSION; }

std::string_view sweep_variable_name(SweepVariable v) noexcept {
    return v == SweepVariable::PMaxDbm ? "p_max_dbm" : "relay_position";
}

std::optional<SweepVariable> parse_sweep_variable(std::string_view name) noexcept {
    if (name == "p_max_dbm") return SweepVariable::PMaxDbm;
    if (name == "relay_position") return SweepVariable::RelayPosition;
    return std::nullopt;
}

std::uint64_t channel_hash(const ChannelRealization& channel) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](double x) {
        auto bits = std::bit_cast<std::uint64_t>(x);
        for (int k = 0; k < 8; ++k) {
            h ^= (bits >> (8 * k)) & 0xffU;
            h *= 0x100000001b3ULL;
        }
    };
    for (double x : channel.h_sq) mix(x);
    for (double x : channel.g_sq) mix(x);
    return h;
}

const std::vector<double>& TrialBatch::rates_for(PolicyId id) const {
    for (std::size_t k = 0; k < policies.size(); ++k) {
        if (policies[k] == id) return rates[k];
    }
    throw std::out_of_range("policy was not part of this batch");
}

TrialBatch run_trials(const SystemConfig& cfg, std::span<const PolicyId> policies, std::size_t trials,
                      std::uint64_t seed, const RunOptions& options) {
    if (trials < 1) {
        throw std::invalid_argument("run_trials: at least one trial is required");
    }
    TrialBatch batch;
    batch.policies.assign(policies.begin(), policies.end());
    batch.rates.assign(policies.size(), std::vector<double>(trials, 0.0));
    batch.channel_hashes.assign(trials, 0);
    std::vector<char> dead(trials, 0);

    // Each trial writes only its own slots, so the output does not depend on
    // how trials are spread over threads.
    auto run_one = [&](std::size_t t) {
        const ChannelRealization channel = generate_channel(cfg, seed + t + 1);
        batch.channel_hashes[t] = channel_hash(channel);
        for (std::size_t k = 0; k < policies.size(); ++k) {
            try {
                batch.rates[k][t] = solve_policy(policies[k], channel, cfg).total_rate;
            } catch (const NoUsablePair&) {
                batch.rates[k][t] = 0.0;
                dead[t] = 1;
            }
        }
    };

    unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.threads;
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, trials));
    if (threads <= 1) {
        for (std::size_t t = 0; t < trials; ++t) run_one(t);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> workers;
        workers.reserve(threads);
        for (unsigned w = 0; w < threads; ++w) {
            workers.emplace_back([&] {
                for (std::size_t t = next++; t < trials; t = next++) run_one(t);
            });
        }
    }
    batch.dead_trials = static_cast<std::size_t>(std::count(dead.begin(), dead.end(), 1));
    return batch;
}

void validate_sweep(const SweepSpec& spec) {
    if (spec.values.empty()) {
        throw std::invalid_argument("sweep needs at least one value");
    }
    for (std::size_t k = 1; k < spec.values.size(); ++k) {
        if (!(spec.values[k] > spec.values[k - 1])) {
            throw std::invalid_argument("values must be strictly increasing");
        }
    }
    if (spec.trials < 1) {
        throw std::invalid_argument("trials must be at least 1");
    }
    if (spec.policies.empty()) {
        throw std::invalid_argument("at least one policy is required");
    }
}

double ordered_mean(std::span<const double> xs) {
    double sum = 0.0;
    for (double x : xs) sum += x;
    return xs.empty() ? 0.0 : sum / static_cast<double>(xs.size());
}

double sample_std(std::span<const double> xs) {
    if (xs.size() < 2) return 0.0;
    const double mean = ordered_mean(xs);
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

double paired_standard_error(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size() || a.empty()) {
        throw std::invalid_argument("paired_standard_error: samples must be paired");
    }
    std::vector<double> diff(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) diff[k] = a[k] - b[k];
    return sample_std(diff) / std::sqrt(static_cast<double>(diff.size()));
}

double SweepRow::std_error() const noexcept {
    return trials == 0 ? 0.0 : std_dev / std::sqrt(static_cast<double>(trials));
}

const SweepRow& SweepResult::at(double value, PolicyId policy) const {
    for (const auto& row : rows) {
        if (row.value == value && row.policy == policy) return row;
    }
    throw std::out_of_range("no sweep row for that value and policy");
}

SweepResult sweep(const SystemConfig& cfg, const SweepSpec& spec, const RunOptions& options) {
    validate_sweep(spec);
    SweepResult result;
    for (std::size_t k = 0; k < spec.values.size(); ++k) {
        const double value = spec.values[k];
        SystemConfig point = cfg;
        if (spec.variable == SweepVariable::PMaxDbm) {
            point.p_max = dbm_to_mw(value);
        } else {
            point.dr = value * cfg.d0;
        }
        point = validate_config(point);
        const std::uint64_t point_seed = spec.seed + k * kPointSeedStride;
        TrialBatch batch = run_trials(point, spec.policies, spec.trials, point_seed, options);
        result.dead_trials += batch.dead_trials;
        for (std::size_t p = 0; p < spec.policies.size(); ++p) {
            SweepRow row;
            row.variable = spec.variable;
            row.value = value;
            row.policy = spec.policies[p];
            row.samples = std::move(batch.rates[p]);
            row.mean = ordered_mean(row.samples);
            row.std_dev = sample_std(row.samples);
            row.trials = spec.trials;
            row.seed = point_seed;
            result.rows.push_back(std::move(row));
        }
    }
    return result;
}

std::string sweep_to_csv(const SweepResult& result, bool banner) {
    std::string out;
    if (banner) {
        out += fmt::format("# swipt-relay {}\n", library_version());
    }
    out += "sweep_variable,sweep_value,policy,mean_rate_bps_hz,std_rate,trials,seed\n";
    for (const auto& row : result.rows) {
        out += fmt::format("{},{},{},{},{},{},{}\n", sweep_variable_name(row.variable), row.value,
                           policy_name(row.policy), row.mean, row.std_dev, row.trials, row.seed);
    }
    return out;
}

}  // namespace swipt
