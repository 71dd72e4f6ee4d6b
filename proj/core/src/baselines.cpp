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

#include "swipt/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "swipt/allocator.hpp"

namespace swipt {

std::string_view policy_name(PolicyId id) noexcept {
    switch (id) {
        case PolicyId::Proposed: return "proposed";
        case PolicyId::OpaNoPairing: return "opa-nopair";
        case PolicyId::UniformWithPairing: return "uniform-pair";
        case PolicyId::UniformNoPairing: return "uniform-nopair";
        case PolicyId::ConventionalNonEH: return "conventional";
    }
    return "unknown";
}

std::optional<PolicyId> parse_policy(std::string_view name) noexcept {
    for (PolicyId id : kAllPolicies) {
        if (policy_name(id) == name) {
            return id;
        }
    }
    return std::nullopt;
}

std::string valid_policy_names() {
    std::string out;
    for (PolicyId id : kAllPolicies) {
        if (!out.empty()) out += ", ";
        out += policy_name(id);
    }
    return out;
}

AllocationResult solve_opa_no_pairing(const ChannelRealization& channel, const SystemConfig& cfg) {
    return allocate_for_pairing(channel, cfg, SubcarrierPairing::identity(channel.size()));
}

AllocationResult solve_uniform(const ChannelRealization& channel, const SystemConfig& cfg, bool use_pairing) {
    check_channel(channel, cfg);
    const std::size_t n = channel.size();
    auto pairing = use_pairing ? sorted_pairing(channel.h_sq, channel.g_sq) : SubcarrierPairing::identity(n);
    std::vector<double> powers(n, cfg.p_max / static_cast<double>(n));
    return evaluate_allocation(channel, cfg, pairing, std::move(powers));
}

double conventional_relay_noise(const NoiseProfile& noise) noexcept { return noise.sigma_d_sq(); }

double conventional_gain(double h_sq, double g_sq, const NoiseProfile& noise) {
    const double first = h_sq / conventional_relay_noise(noise);
    const double second = g_sq / noise.sigma_d_sq();
    if (!(first > 0.0) || !(second > 0.0)) {
        return 0.0;
    }
    return first * second / (first + second);
}

AllocationResult solve_conventional(const ChannelRealization& channel, const SystemConfig& cfg) {
    check_channel(channel, cfg);
    const NoiseProfile& noise = cfg.noise;
    const std::size_t n = channel.size();
    auto pairing = sorted_pairing(channel.h_sq, channel.g_sq);

    std::vector<double> gammas(n);
    for (std::size_t i = 0; i < n; ++i) {
        gammas[i] = conventional_gain(channel.h_sq[i], channel.g_sq[pairing[i]], noise);
    }
    auto budget = waterfill(gammas, cfg.p_max);

    AllocationResult out;
    out.pairing = pairing;
    out.rho_i.assign(n, 1.0);
    out.relay_powers.assign(n, 0.0);
    out.pair_rates.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        if (gammas[i] <= 0.0 || budget[i] <= 0.0) {
            continue;
        }
        const double first = channel.h_sq[i] / conventional_relay_noise(noise);
        const double second = channel.g_sq[pairing[i]] / noise.sigma_d_sq();
        // first * source == second * relay, source + relay == budget
        const double source = second * budget[i] / (first + second);
        const double relay = first * budget[i] / (first + second);
        out.relay_powers[i] = relay;
        const double r1 = std::log1p(first * source) / std::numbers::ln2;
        const double r2 = std::log1p(second * relay) / std::numbers::ln2;
        out.pair_rates[i] = 0.5 * std::min(r1, r2);
    }
    out.powers = std::move(budget);
    out.total_rate = std::accumulate(out.pair_rates.begin(), out.pair_rates.end(), 0.0);
    return out;
}

AllocationResult solve_policy(PolicyId id, const ChannelRealization& channel, const SystemConfig& cfg) {
    switch (id) {
        case PolicyId::Proposed: return solve(channel, cfg);
        case PolicyId::OpaNoPairing: return solve_opa_no_pairing(channel, cfg);
        case PolicyId::UniformWithPairing: return solve_uniform(channel, cfg, true);
        case PolicyId::UniformNoPairing: return solve_uniform(channel, cfg, false);
        case PolicyId::ConventionalNonEH: return solve_conventional(channel, cfg);
    }
    throw std::invalid_argument("unknown policy");
}

}  // namespace swipt
