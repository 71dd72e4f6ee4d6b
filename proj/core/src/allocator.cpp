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

#include "swipt/allocator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace swipt {

namespace {

double log2_1p(double x) { return std::log1p(x) / std::numbers::ln2; }

std::vector<std::size_t> descending_order(std::span<const double> values) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
    return order;
}

}  // namespace

HopRates hop_rates(double h_sq, double g_sq, double rho_info, double power, const SystemConfig& cfg) {
    const NoiseProfile& n = cfg.noise;
    const double rho_harvest = 1.0 - rho_info;
    HopRates out;
    out.relay = log2_1p(rho_info * h_sq * power / (rho_info * n.sigma_ra_sq + n.sigma_rb_sq));
    out.destination = log2_1p(cfg.eta * rho_harvest * h_sq * g_sq * power / n.sigma_d_sq());
    return out;
}

double pair_rate(double h_sq, double g_sq, double rho_info, double power, const SystemConfig& cfg) {
    const HopRates r = hop_rates(h_sq, g_sq, rho_info, power, cfg);
    return 0.5 * std::min(r.relay, r.destination);
}

SubcarrierPairing sorted_pairing(std::span<const double> h_sq, std::span<const double> g_sq) {
    if (h_sq.size() != g_sq.size()) {
        throw std::invalid_argument("sorted_pairing: hop gain vectors differ in length");
    }
    const auto incoming = descending_order(h_sq);
    const auto outgoing = descending_order(g_sq);
    std::vector<std::size_t> perm(h_sq.size());
    for (std::size_t k = 0; k < perm.size(); ++k) {
        perm[incoming[k]] = outgoing[k];
    }
    return SubcarrierPairing(std::move(perm));
}

double optimal_rho_for_b(double b, const NoiseProfile& noise) {
    if (!(b > 0.0)) {
        throw std::invalid_argument("optimal_rho_for_b: b must be positive");
    }
    // Quadratic divided through by b, so neither very large nor very small b
    // overflows: sra rho^2 + (1/b - sra + srb) rho - srb = 0.
    const double a = noise.sigma_ra_sq;
    const double c = noise.sigma_rb_sq;
    const double lin = 1.0 / b - a + c;
    const double disc = std::hypot(lin, 2.0 * std::sqrt(a * c));
    // Pick the form of the positive root that never subtracts nearly equal terms.
    double rho = lin >= 0.0 ? 2.0 * c / (lin + disc) : (disc - lin) / (2.0 * a);
    rho = std::clamp(rho, std::numeric_limits<double>::denorm_min(), std::nextafter(1.0, 0.0));
    return rho;
}

std::optional<SplitRatio> optimal_rho(double g_sq, const SystemConfig& cfg) {
    const double b = cfg.eta * g_sq / cfg.noise.sigma_d_sq();
    if (!(b > 0.0)) {
        return std::nullopt;
    }
    const double rho = optimal_rho_for_b(b, cfg.noise);
    return SplitRatio{rho, 1.0 - rho};
}

EffectiveGain effective_gain(double h_sq, double rho_info, const NoiseProfile& noise) {
    return {h_sq * rho_info / (rho_info * noise.sigma_ra_sq + noise.sigma_rb_sq)};
}

double WaterfillSolution::nu() const { return 1.0 / (level * std::numbers::ln2); }

WaterfillSolution waterfill_solution(std::span<const double> gammas, double p_max) {
    if (!(p_max > 0.0) || !std::isfinite(p_max)) {
        throw std::invalid_argument("waterfill: p_max must be positive and finite");
    }
    constexpr double kInf = std::numeric_limits<double>::infinity();
    std::vector<double> inverse(gammas.size(), kInf);
    double floor = kInf;
    for (std::size_t i = 0; i < gammas.size(); ++i) {
        if (gammas[i] > 0.0) {
            inverse[i] = 1.0 / gammas[i];
            floor = std::min(floor, inverse[i]);
        }
    }
    if (!std::isfinite(floor)) {
        throw NoUsablePair();
    }

    auto poured = [&](double level) {
        double total = 0.0;
        for (double inv : inverse) {
            total += std::max(0.0, level - inv);
        }
        return total;
    };

    // Bisection on the water level; poured() is nondecreasing in it.
    double lo = floor;
    double hi = floor + p_max;
    while (hi - lo > 1e-12 * hi) {
        const double mid = 0.5 * (lo + hi);
        if (poured(mid) < p_max) {
            lo = mid;
        } else {
            hi = mid;
        }
    }

    // Settle the active set, then take the level in closed form on it so the
    // budget is met to rounding rather than to the bisection width.
    std::vector<bool> active(inverse.size());
    for (std::size_t i = 0; i < inverse.size(); ++i) {
        active[i] = inverse[i] < hi;
    }
    double level = hi;
    for (std::size_t pass = 0; pass <= inverse.size(); ++pass) {
        double sum_inv = 0.0;
        std::size_t count = 0;
        for (std::size_t i = 0; i < inverse.size(); ++i) {
            if (active[i]) {
                sum_inv += inverse[i];
                ++count;
            }
        }
        level = (p_max + sum_inv) / static_cast<double>(count);
        bool changed = false;
        for (std::size_t i = 0; i < inverse.size(); ++i) {
            const bool should = inverse[i] < level;
            if (should != active[i]) {
                active[i] = should;
                changed = true;
            }
        }
        if (!changed) {
            break;
        }
    }

    WaterfillSolution out;
    out.level = level;
    out.powers.assign(inverse.size(), 0.0);
    for (std::size_t i = 0; i < inverse.size(); ++i) {
        if (active[i]) {
            out.powers[i] = std::max(0.0, level - inverse[i]);
        }
    }
    return out;
}

std::vector<double> waterfill(std::span<const double> gammas, double p_max) {
    return waterfill_solution(gammas, p_max).powers;
}

AllocationResult evaluate_allocation(const ChannelRealization& channel, const SystemConfig& cfg,
                                     const SubcarrierPairing& pairing, std::vector<double> powers) {
    const std::size_t n = channel.size();
    if (pairing.size() != n || powers.size() != n) {
        throw std::invalid_argument("evaluate_allocation: size mismatch");
    }
    AllocationResult out;
    out.pairing = pairing;
    out.rho_i.resize(n);
    out.relay_powers.resize(n);
    out.pair_rates.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double h = channel.h_sq[i];
        const double g = channel.g_sq[pairing[i]];
        // A dead second hop can only waste energy: send everything to decoding.
        const auto split = optimal_rho(g, cfg);
        const double rho = split ? split->info : 1.0;
        out.rho_i[i] = rho;
        out.relay_powers[i] = cfg.eta * (1.0 - rho) * h * powers[i];
        out.pair_rates[i] = pair_rate(h, g, rho, powers[i], cfg);
    }
    out.powers = std::move(powers);
    out.total_rate = std::accumulate(out.pair_rates.begin(), out.pair_rates.end(), 0.0);
    return out;
}

std::vector<double> pair_gammas(const ChannelRealization& channel, const SystemConfig& cfg,
                                const SubcarrierPairing& pairing) {
    std::vector<double> gammas(channel.size(), 0.0);
    for (std::size_t i = 0; i < channel.size(); ++i) {
        const auto split = optimal_rho(channel.g_sq[pairing[i]], cfg);
        if (split && channel.h_sq[i] > 0.0) {
            gammas[i] = effective_gain(channel.h_sq[i], split->info, cfg.noise).gamma;
        }
    }
    return gammas;
}

AllocationResult allocate_for_pairing(const ChannelRealization& channel, const SystemConfig& cfg,
                                      const SubcarrierPairing& pairing) {
    check_channel(channel, cfg);
    if (pairing.size() != channel.size()) {
        throw std::invalid_argument("pairing size does not match the channel");
    }
    const auto gammas = pair_gammas(channel, cfg, pairing);
    return evaluate_allocation(channel, cfg, pairing, waterfill(gammas, cfg.p_max));
}

AllocationResult solve(const ChannelRealization& channel, const SystemConfig& cfg) {
    check_channel(channel, cfg);
    return allocate_for_pairing(channel, cfg, sorted_pairing(channel.h_sq, channel.g_sq));
}

}  // namespace swipt
