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

#ifndef SWIPT_MODEL_HPP
#define SWIPT_MODEL_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace swipt {

// All powers are linear milliwatts. dBm only appears at the I/O boundary.

/// Noise variances of the relay (antenna + processing) and destination.
struct NoiseProfile {
    double sigma_ra_sq = 0.0;  ///< antenna noise at the relay
    double sigma_rb_sq = 0.0;  ///< signal-processing noise at the relay
    double sigma_da_sq = 0.0;  ///< antenna noise at the destination
    double sigma_db_sq = 0.0;  ///< signal-processing noise at the destination

    /// Total destination noise; the only destination quantity any rate uses.
    double sigma_d_sq() const noexcept { return sigma_da_sq + sigma_db_sq; }

    bool operator==(const NoiseProfile&) const = default;
};

struct SystemConfig {
    std::size_t n_subcarriers = 4;
    double p_max = 1000.0;  // mW
    double eta = 1.0;
    double d0 = 1.0;   // source -> destination, m
    double dr = 0.5;   // source -> relay, m
    double alpha = 3.0;
    std::size_t taps = 4;
    NoiseProfile noise{};

    bool operator==(const SystemConfig&) const = default;
};

/// Per-subcarrier magnitude-squared gains of both hops.
struct ChannelRealization {
    std::vector<double> h_sq;  // source -> relay, indexed by incoming subcarrier
    std::vector<double> g_sq;  // relay -> destination, indexed by outgoing subcarrier

    std::size_t size() const noexcept { return h_sq.size(); }
    bool operator==(const ChannelRealization&) const = default;
};

/// A one-to-one matching of incoming subcarrier i to outgoing subcarrier
/// perm()[i]. Indices are zero-based.
class SubcarrierPairing {
public:
    SubcarrierPairing() = default;
    /// Throws std::invalid_argument unless `perm` is a permutation of 0..N-1.
    explicit SubcarrierPairing(std::vector<std::size_t> perm);

    static SubcarrierPairing identity(std::size_t n);

    std::size_t size() const noexcept { return perm_.size(); }
    std::size_t operator[](std::size_t incoming) const { return perm_.at(incoming); }
    const std::vector<std::size_t>& perm() const noexcept { return perm_; }

    bool operator==(const SubcarrierPairing&) const = default;

private:
    std::vector<std::size_t> perm_;
};

/// Result of one allocation policy. Every vector is indexed by the incoming
/// subcarrier i (the pair (i, pairing[i])).
struct AllocationResult {
    SubcarrierPairing pairing;
    std::vector<double> rho_i;        ///< information-decoding share; harvest share is 1 - rho_i
    std::vector<double> powers;       ///< per-pair draw on the P_max budget, mW
    std::vector<double> relay_powers; ///< relay transmit power on the paired outgoing subcarrier, mW
    std::vector<double> pair_rates;   ///< bits/s/Hz, includes the 1/2 two-slot pre-log
    double total_rate = 0.0;

    double total_power() const noexcept;
};

/// Raised when no subcarrier pair can carry any rate (every effective gain is 0).
class NoUsablePair : public std::runtime_error {
public:
    NoUsablePair() : std::runtime_error("no usable pair: every effective gain is zero") {}
};

struct ConfigViolation {
    std::string field;
    std::string message;
};

class ConfigError : public std::invalid_argument {
public:
    explicit ConfigError(std::vector<ConfigViolation> violations);
    const std::vector<ConfigViolation>& violations() const noexcept { return violations_; }

private:
    std::vector<ConfigViolation> violations_;
};

/// 10^(x/10). Throws std::invalid_argument for non-finite input.
double dbm_to_mw(double dbm);
double mw_to_dbm(double mw);

/// Every invariant violation of `cfg`, in field order. Empty means valid.
std::vector<ConfigViolation> check_config(const SystemConfig& cfg);

/// Returns `cfg` unchanged if valid; otherwise throws ConfigError carrying
/// the complete violation list.
SystemConfig validate_config(const SystemConfig& cfg);

/// Throws std::invalid_argument if the channel does not match cfg or holds
/// negative / non-finite gains.
void check_channel(const ChannelRealization& channel, const SystemConfig& cfg);

/// N = 4, L = 4, alpha = 3, eta = 1, d0 = 1 m, relay at the midpoint,
/// P_max = 30 dBm, every relay noise 1 dBm and total destination noise 1 dBm
/// (split evenly between antenna and processing noise).
SystemConfig default_config();

}  // namespace swipt

#endif  // SWIPT_MODEL_HPP
