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

#ifndef SWIPT_ALLOCATOR_HPP
#define SWIPT_ALLOCATOR_HPP

#include <optional>
#include <span>
#include <vector>

#include "swipt/model.hpp"

namespace swipt {

/// Power-splitting ratios at the relay receiver; info + harvest == 1.
struct SplitRatio {
    double info = 1.0;
    double harvest = 0.0;
};

/// End-to-end SNR slope of a pair after the optimal split: rate = 1/2 log2(1 + gamma P).
struct EffectiveGain {
    double gamma = 0.0;  // 1/mW
};

/// The two arguments of the decode-and-forward min, in bits (no 1/2 pre-log).
struct HopRates {
    double relay = 0.0;        ///< source -> relay information stream
    double destination = 0.0;  ///< relay -> destination with harvested power
};

HopRates hop_rates(double h_sq, double g_sq, double rho_info, double power, const SystemConfig& cfg);

/// 1/2 min{hop rates}. Zero when power, rho_info, or either gain is zero.
double pair_rate(double h_sq, double g_sq, double rho_info, double power, const SystemConfig& cfg);

/// Pairs the k-th strongest incoming subcarrier with the k-th strongest
/// outgoing one. Ties keep the lower original index first.
SubcarrierPairing sorted_pairing(std::span<const double> h_sq, std::span<const double> g_sq);

/// Positive root of
///   b sra rho^2 + (1 - b sra + b srb) rho - b srb = 0,  b = eta g_sq / sigma_d^2,
/// i.e. the split at which both hop rates coincide. Returns nullopt when
/// b == 0 (the pair can never deliver anything).
std::optional<SplitRatio> optimal_rho(double g_sq, const SystemConfig& cfg);

/// Same root, parameterized directly by b.
double optimal_rho_for_b(double b, const NoiseProfile& noise);

/// gamma = h_sq rho / (rho sra + srb).
EffectiveGain effective_gain(double h_sq, double rho_info, const NoiseProfile& noise);

struct WaterfillSolution {
    std::vector<double> powers;
    double level = 0.0;  ///< common 1/gamma + P over active channels, i.e. 1/(nu ln 2)
    double nu() const;
};

/// Maximizes sum 1/2 log2(1 + gamma_i P_i) subject to sum P_i = p_max, P_i >= 0.
/// Channels with gamma <= 0 get zero power. Throws NoUsablePair if every
/// gamma is zero, std::invalid_argument if p_max is not positive.
WaterfillSolution waterfill_solution(std::span<const double> gammas, double p_max);
std::vector<double> waterfill(std::span<const double> gammas, double p_max);

/// Optimal split on every pair of `pairing`, then the given per-pair powers.
AllocationResult evaluate_allocation(const ChannelRealization& channel, const SystemConfig& cfg,
                                     const SubcarrierPairing& pairing, std::vector<double> powers);

/// Effective gain of every pair (i, pairing[i]) at its optimal split.
std::vector<double> pair_gammas(const ChannelRealization& channel, const SystemConfig& cfg,
                                const SubcarrierPairing& pairing);

/// Optimal split and water-filling for a fixed pairing.
AllocationResult allocate_for_pairing(const ChannelRealization& channel, const SystemConfig& cfg,
                                      const SubcarrierPairing& pairing);

/// Sorted pairing, then optimal splitting, then water-filling.
AllocationResult solve(const ChannelRealization& channel, const SystemConfig& cfg);

}  // namespace swipt

#endif  // SWIPT_ALLOCATOR_HPP
