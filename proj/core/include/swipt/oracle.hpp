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

#ifndef SWIPT_ORACLE_HPP
#define SWIPT_ORACLE_HPP

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "swipt/model.hpp"

namespace swipt::oracle {

// Brute-force counterparts of the closed-form allocator. Nothing here calls
// the closed-form root or the sorted pairing; enumeration and grid searches
// use the allocator only for the steps they do not certify.

inline constexpr std::size_t kMaxExhaustiveSubcarriers = 8;

/// Root of relay_rate(rho) - destination_rate(rho) on [0, 1] by bisection at
/// source power `power` (the root does not depend on it). Throws
/// std::domain_error if the endpoint signs do not bracket a root.
double rho_by_bisection(double g_sq, const SystemConfig& cfg, double tol, double power = 1.0);

struct PairingOptimum {
    SubcarrierPairing pairing;
    double rate = 0.0;
};

/// Tries all N! pairings with optimal splitting and water-filling on each.
/// Ties resolve to the lexicographically smallest permutation. Throws
/// std::invalid_argument for N > 8.
PairingOptimum best_pairing_exhaustive(const ChannelRealization& channel, const SystemConfig& cfg);

/// Grid search P_1 in {0, p/res, ..., p}, P_2 = p - P_1, maximizing
/// sum 1/2 log2(1 + gamma_i P_i).
std::array<double, 2> power_by_grid(std::array<double, 2> gammas, double p_max, std::size_t resolution);

/// Two-channel water-filling ignoring P_i >= 0:
///   P_1 = p/2 + (1/gamma_2 - 1/gamma_1)/2.
/// Valid only when both results fall inside (0, p).
std::array<double, 2> two_channel_interior_powers(std::array<double, 2> gammas, double p_max);

/// Best conventional-relay rate for N = 2 over both pairings and a
/// resolution^3 grid of (source_1, relay_1, source_2), relay_2 taking the
/// rest of the pooled budget. Each of the `zoom_levels` extra passes regrids
/// a box four cells wide around the best point so far on a 40^3 grid.
double conventional_rate_by_grid(const ChannelRealization& channel, const SystemConfig& cfg,
                                 std::size_t resolution, std::size_t zoom_levels = 2);

struct CheckResult {
    std::string name;
    bool pass = false;
    double residual = 0.0;
    double tolerance = 0.0;
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    bool all_pass() const noexcept;
    const CheckResult* find(const std::string& name) const noexcept;
};

/// Checks an allocation produced by the proposed policy against every
/// property it must satisfy. Failures become report entries.
VerificationReport verify_result(const ChannelRealization& channel, const SystemConfig& cfg,
                                 const AllocationResult& result, double tol);

/// Solves `channel` with the proposed policy and verifies the result.
/// Throws std::invalid_argument for N > 8 or tol <= 0.
VerificationReport verify(const ChannelRealization& channel, const SystemConfig& cfg, double tol);

}  // namespace swipt::oracle

#endif  // SWIPT_ORACLE_HPP
