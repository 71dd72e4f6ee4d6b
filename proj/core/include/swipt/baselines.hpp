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

#ifndef SWIPT_BASELINES_HPP
#define SWIPT_BASELINES_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "swipt/model.hpp"

namespace swipt {

enum class PolicyId {
    Proposed,
    OpaNoPairing,
    UniformWithPairing,
    UniformNoPairing,
    ConventionalNonEH,
};

inline constexpr std::array<PolicyId, 5> kAllPolicies = {
    PolicyId::Proposed, PolicyId::OpaNoPairing, PolicyId::UniformWithPairing,
    PolicyId::UniformNoPairing, PolicyId::ConventionalNonEH,
};

/// "proposed", "opa-nopair", "uniform-pair", "uniform-nopair", "conventional".
std::string_view policy_name(PolicyId id) noexcept;
std::optional<PolicyId> parse_policy(std::string_view name) noexcept;
/// Comma-separated list of every valid policy name.
std::string valid_policy_names();

/// Identity pairing, optimal split per pair, water-filling.
AllocationResult solve_opa_no_pairing(const ChannelRealization& channel, const SystemConfig& cfg);

/// P_max / N on every pair, optimal split per pair; sorted pairing if
/// `use_pairing`, identity otherwise.
AllocationResult solve_uniform(const ChannelRealization& channel, const SystemConfig& cfg, bool use_pairing);

/// Receiver noise of a relay without a power splitter. It is an ordinary
/// single-chain receiver like the destination, so it carries the same total
/// noise sigma_d^2.
double conventional_relay_noise(const NoiseProfile& noise) noexcept;

/// Decode-and-forward relay with its own supply under the pooled budget
/// sum(source) + sum(relay) = P_max. Each pair splits its budget Q so both hops
/// carry the same rate, which leaves
///   gamma~ = (h/sr^2 * g/sd^2) / (h/sr^2 + g/sd^2)   per mW of Q,
/// with sr^2 = conventional_relay_noise(),
/// then pairs are sorted and Q is water-filled. `powers` holds Q, `relay_powers`
/// the relay share of Q, and rho_i is 1 (no splitter).
AllocationResult solve_conventional(const ChannelRealization& channel, const SystemConfig& cfg);

/// Per-pair gamma~ of the conventional relay for the given gains.
double conventional_gain(double h_sq, double g_sq, const NoiseProfile& noise);

AllocationResult solve_policy(PolicyId id, const ChannelRealization& channel, const SystemConfig& cfg);

}  // namespace swipt

#endif  // SWIPT_BASELINES_HPP
