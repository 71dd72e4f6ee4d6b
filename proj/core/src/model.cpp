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

#include "swipt/model.hpp"

#include <cmath>
#include <numeric>

namespace swipt {

namespace {

std::string join_violations(const std::vector<ConfigViolation>& violations) {
    std::string out = "invalid configuration:";
    for (const auto& v : violations) {
        out += "\n  ";
        out += v.field;
        out += ": ";
        out += v.message;
    }
    return out;
}

bool positive_finite(double x) { return std::isfinite(x) && x > 0.0; }

}  // namespace

SubcarrierPairing::SubcarrierPairing(std::vector<std::size_t> perm) : perm_(std::move(perm)) {
    std::vector<bool> seen(perm_.size(), false);
    for (std::size_t j : perm_) {
        if (j >= perm_.size() || seen[j]) {
            throw std::invalid_argument("pairing is not a permutation of the subcarrier indices");
        }
        seen[j] = true;
    }
}

SubcarrierPairing SubcarrierPairing::identity(std::size_t n) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    return SubcarrierPairing(std::move(perm));
}

double AllocationResult::total_power() const noexcept {
    return std::accumulate(powers.begin(), powers.end(), 0.0);
}

ConfigError::ConfigError(std::vector<ConfigViolation> violations)
    : std::invalid_argument(join_violations(violations)), violations_(std::move(violations)) {}

double dbm_to_mw(double dbm) {
    if (!std::isfinite(dbm)) {
        throw std::invalid_argument("dBm value must be finite");
    }
    return std::pow(10.0, dbm / 10.0);
}

double mw_to_dbm(double mw) {
    if (!positive_finite(mw)) {
        throw std::invalid_argument("mW value must be positive and finite");
    }
    return 10.0 * std::log10(mw);
}

std::vector<ConfigViolation> check_config(const SystemConfig& cfg) {
    std::vector<ConfigViolation> out;
    if (cfg.n_subcarriers < 1) {
        out.push_back({"n_subcarriers", "must be at least 1"});
    }
    if (!positive_finite(cfg.p_max)) {
        out.push_back({"p_max", "must be positive and finite"});
    }
    if (!(cfg.eta >= 0.0 && cfg.eta <= 1.0)) {
        out.push_back({"eta", "eta out of [0,1]"});
    }
    if (!positive_finite(cfg.d0)) {
        out.push_back({"d0", "must be positive and finite"});
    }
    if (!(std::isfinite(cfg.dr) && cfg.dr > 0.0 && cfg.dr < cfg.d0)) {
        out.push_back({"dr", "relay must lie strictly between source and destination (0 < dr < d0)"});
    }
    if (!positive_finite(cfg.alpha)) {
        out.push_back({"alpha", "must be positive and finite"});
    }
    if (cfg.taps < 1) {
        out.push_back({"taps", "must be at least 1"});
    } else if (cfg.taps > cfg.n_subcarriers) {
        out.push_back({"taps", "must not exceed n_subcarriers"});
    }
    const NoiseProfile& n = cfg.noise;
    if (!positive_finite(n.sigma_ra_sq)) out.push_back({"noise.sigma_ra_sq", "must be positive and finite"});
    if (!positive_finite(n.sigma_rb_sq)) out.push_back({"noise.sigma_rb_sq", "must be positive and finite"});
    if (!positive_finite(n.sigma_da_sq)) out.push_back({"noise.sigma_da_sq", "must be positive and finite"});
    if (!positive_finite(n.sigma_db_sq)) out.push_back({"noise.sigma_db_sq", "must be positive and finite"});
    return out;
}

SystemConfig validate_config(const SystemConfig& cfg) {
    auto violations = check_config(cfg);
    if (!violations.empty()) {
        throw ConfigError(std::move(violations));
    }
    return cfg;
}

void check_channel(const ChannelRealization& channel, const SystemConfig& cfg) {
    if (channel.h_sq.size() != cfg.n_subcarriers || channel.g_sq.size() != cfg.n_subcarriers) {
        throw std::invalid_argument("channel must carry n_subcarriers gains per hop");
    }
    auto bad = [](double x) { return !std::isfinite(x) || x < 0.0; };
    for (std::size_t i = 0; i < channel.size(); ++i) {
        if (bad(channel.h_sq[i]) || bad(channel.g_sq[i])) {
            throw std::invalid_argument("channel gains must be finite and nonnegative");
        }
    }
}

SystemConfig default_config() {
    const double one_dbm = dbm_to_mw(1.0);
    SystemConfig cfg;
    cfg.n_subcarriers = 4;
    cfg.p_max = dbm_to_mw(30.0);
    cfg.eta = 1.0;
    cfg.d0 = 1.0;
    cfg.dr = 0.5;
    cfg.alpha = 3.0;
    cfg.taps = 4;
    cfg.noise = NoiseProfile{one_dbm, one_dbm, one_dbm / 2.0, one_dbm / 2.0};
    return cfg;
}

}  // namespace swipt
