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

#include "swipt/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "swipt/allocator.hpp"
#include "swipt/baselines.hpp"

namespace swipt::oracle {

namespace {

double log2_1p(double x) { return std::log1p(x) / std::numbers::ln2; }

// Written out here rather than borrowed from the allocator so the bisection
// does not share code with what it certifies.
double relay_minus_destination(double rho, double g_sq, double power, const SystemConfig& cfg) {
    const NoiseProfile& n = cfg.noise;
    const double relay = log2_1p(rho * power / (rho * n.sigma_ra_sq + n.sigma_rb_sq));
    const double destination = log2_1p(cfg.eta * (1.0 - rho) * g_sq * power / (n.sigma_da_sq + n.sigma_db_sq));
    return relay - destination;
}

double two_channel_rate(std::array<double, 2> gammas, double p1, double p2) {
    return 0.5 * (log2_1p(gammas[0] * p1) + log2_1p(gammas[1] * p2));
}

CheckResult make_check(std::string name, double residual, double tol) {
    return CheckResult{std::move(name), residual <= tol, residual, tol};
}

}  // namespace

double rho_by_bisection(double g_sq, const SystemConfig& cfg, double tol, double power) {
    if (!(tol > 0.0 && tol < 1.0)) {
        throw std::invalid_argument("rho_by_bisection: tol must lie in (0, 1)");
    }
    double lo = 0.0;
    double hi = 1.0;
    if (!(relay_minus_destination(lo, g_sq, power, cfg) < 0.0) ||
        !(relay_minus_destination(hi, g_sq, power, cfg) > 0.0)) {
        throw std::domain_error("rho_by_bisection: hop rates do not cross on [0, 1]");
    }
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        const double f = relay_minus_destination(mid, g_sq, power, cfg);
        if (f == 0.0) {
            return mid;
        }
        (f < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

PairingOptimum best_pairing_exhaustive(const ChannelRealization& channel, const SystemConfig& cfg) {
    const std::size_t n = channel.size();
    if (n > kMaxExhaustiveSubcarriers) {
        throw std::invalid_argument("exhaustive pairing search is capped at N = 8 (N! permutations); "
                                    "reduce n_subcarriers");
    }
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    PairingOptimum best{SubcarrierPairing(perm), -1.0};
    do {
        SubcarrierPairing pairing(perm);
        double rate = 0.0;
        try {
            rate = allocate_for_pairing(channel, cfg, pairing).total_rate;
        } catch (const NoUsablePair&) {
            rate = 0.0;
        }
        if (rate > best.rate) {
            best = PairingOptimum{std::move(pairing), rate};
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::array<double, 2> power_by_grid(std::array<double, 2> gammas, double p_max, std::size_t resolution) {
    if (resolution < 1) {
        throw std::invalid_argument("power_by_grid: resolution must be at least 1");
    }
    std::array<double, 2> best{0.0, p_max};
    double best_rate = -1.0;
    for (std::size_t k = 0; k <= resolution; ++k) {
        const double p1 = p_max * static_cast<double>(k) / static_cast<double>(resolution);
        const double p2 = p_max - p1;
        const double rate = two_channel_rate(gammas, p1, p2);
        if (rate > best_rate) {
            best_rate = rate;
            best = {p1, p2};
        }
    }
    return best;
}

std::array<double, 2> two_channel_interior_powers(std::array<double, 2> gammas, double p_max) {
    const double shift = 0.5 * (1.0 / gammas[1] - 1.0 / gammas[0]);
    return {0.5 * p_max + shift, 0.5 * p_max - shift};
}

double conventional_rate_by_grid(const ChannelRealization& channel, const SystemConfig& cfg,
                                 std::size_t resolution, std::size_t zoom_levels) {
    if (channel.size() != 2) {
        throw std::invalid_argument("conventional_rate_by_grid needs exactly two subcarriers");
    }
    if (resolution < 4) {
        throw std::invalid_argument("grid resolution must be at least 4");
    }
    const double sr = conventional_relay_noise(cfg.noise);
    const double sd = cfg.noise.sigma_d_sq();
    const double p_max = cfg.p_max;
    const auto res = static_cast<double>(resolution);
    constexpr std::size_t kZoomCells = 40;

    double best = 0.0;
    for (const auto& perm : {std::array<std::size_t, 2>{0, 1}, std::array<std::size_t, 2>{1, 0}}) {
        const double x1 = channel.h_sq[0] / sr;
        const double x2 = channel.h_sq[1] / sr;
        const double y1 = channel.g_sq[perm[0]] / sd;
        const double y2 = channel.g_sq[perm[1]] / sd;
        auto rate = [&](double s1, double r1, double s2) {
            const double r2 = std::max(p_max - s1 - r1 - s2, 0.0);
            return 0.5 * std::min(log2_1p(x1 * s1), log2_1p(y1 * r1)) +
                   0.5 * std::min(log2_1p(x2 * s2), log2_1p(y2 * r2));
        };

        // Full simplex grid first, then regrid a box of +-2 cells around the
        // incumbent with kZoomCells per side. The objective is concave, so the box keeps the maximum.
        std::array<double, 3> lo{0.0, 0.0, 0.0};
        double step = p_max / res;
        std::size_t cells = resolution;
        std::array<double, 3> arg{0.0, 0.0, 0.0};
        double local = -1.0;
        for (std::size_t level = 0; level <= zoom_levels; ++level) {
            for (std::size_t a = 0; a <= cells; ++a) {
                const double s1 = lo[0] + step * static_cast<double>(a);
                if (s1 > p_max) break;
                for (std::size_t b = 0; b <= cells; ++b) {
                    const double r1 = lo[1] + step * static_cast<double>(b);
                    if (s1 + r1 > p_max) break;
                    for (std::size_t c = 0; c <= cells; ++c) {
                        const double s2 = lo[2] + step * static_cast<double>(c);
                        if (s1 + r1 + s2 > p_max) break;
                        const double v = rate(s1, r1, s2);
                        if (v > local) {
                            local = v;
                            arg = {s1, r1, s2};
                        }
                    }
                }
            }
            const double width = 4.0 * step;
            for (std::size_t d = 0; d < 3; ++d) {
                lo[d] = std::max(arg[d] - width / 2.0, 0.0);
            }
            cells = kZoomCells;
            step = width / static_cast<double>(cells);
        }
        best = std::max(best, local);
    }
    return best;
}

bool VerificationReport::all_pass() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const CheckResult* VerificationReport::find(const std::string& name) const noexcept {
    for (const auto& c : checks) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

VerificationReport verify_result(const ChannelRealization& channel, const SystemConfig& cfg,
                                 const AllocationResult& result, double tol) {
    const std::size_t n = channel.size();
    const NoiseProfile& noise = cfg.noise;
    VerificationReport report;

    double equal_rate = 0.0;
    double root_bounds = 0.0;
    double bisection_gap = 0.0;
    double closed_form_rate = 0.0;
    std::vector<double> gammas(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const double h = channel.h_sq[i];
        const double g = channel.g_sq[result.pairing[i]];
        const double rho = result.rho_i[i];
        if (g > 0.0 && cfg.eta > 0.0) {
            if (!(rho > 0.0 && rho < 1.0)) root_bounds += 1.0;
            try {
                bisection_gap = std::max(bisection_gap, std::abs(rho - rho_by_bisection(g, cfg, 1e-13)));
            } catch (const std::domain_error&) {
                bisection_gap = std::numeric_limits<double>::infinity();
            }
            if (h > 0.0) gammas[i] = effective_gain(h, rho, noise).gamma;
        }
        const double p = result.powers[i];
        if (p > 0.0 && h > 0.0 && g > 0.0) {
            const HopRates r = hop_rates(h, g, rho, p, cfg);
            equal_rate = std::max(equal_rate, std::abs(r.relay - r.destination) / std::max(r.relay, 1e-12));
        }
        closed_form_rate += 0.5 * log2_1p(gammas[i] * p);
    }
    report.checks.push_back(make_check("equal-rate", equal_rate, tol));
    report.checks.push_back(make_check("root-bounds", root_bounds, 0.0));
    report.checks.push_back(make_check("rho-vs-bisection", bisection_gap, std::max(tol, 1e-10)));

    // Strictly increasing split ratio over a log grid spanning the channel's b values.
    {
        double b_lo = std::numeric_limits<double>::infinity();
        double b_hi = 0.0;
        for (double g : channel.g_sq) {
            const double b = cfg.eta * g / noise.sigma_d_sq();
            if (b > 0.0) {
                b_lo = std::min(b_lo, b);
                b_hi = std::max(b_hi, b);
            }
        }
        double violations = 0.0;
        if (b_hi > 0.0) {
            constexpr int kSamples = 64;
            const double lg_lo = std::log10(b_lo) - 1.0;
            const double lg_hi = std::log10(b_hi) + 1.0;
            double prev = -1.0;
            for (int k = 0; k < kSamples; ++k) {
                const double b = std::pow(10.0, lg_lo + (lg_hi - lg_lo) * k / (kSamples - 1));
                const double rho = optimal_rho_for_b(b, noise);
                if (!(rho > prev)) violations += 1.0;
                prev = rho;
            }
        }
        report.checks.push_back(make_check("monotonicity-in-b", violations, 0.0));
    }

    const double total_power = std::accumulate(result.powers.begin(), result.powers.end(), 0.0);
    report.checks.push_back(make_check("power-budget", std::abs(total_power - cfg.p_max), tol));
    const double min_power = *std::min_element(result.powers.begin(), result.powers.end());
    report.checks.push_back(make_check("nonnegative-power", std::max(0.0, -min_power), 0.0));

    {
        double level = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (result.powers[i] > 0.0 && gammas[i] > 0.0) {
                level = std::max(level, 1.0 / gammas[i] + result.powers[i]);
            }
        }
        double kkt = level > 0.0 ? 0.0 : 1.0;
        for (std::size_t i = 0; i < n && level > 0.0; ++i) {
            if (gammas[i] <= 0.0) {
                if (result.powers[i] > 0.0) kkt = std::max(kkt, 1.0);
                continue;
            }
            const double inv = 1.0 / gammas[i];
            if (result.powers[i] > 0.0) {
                kkt = std::max(kkt, std::abs(inv + result.powers[i] - level) / level);
            } else {
                kkt = std::max(kkt, std::max(0.0, level - inv) / level);
            }
        }
        report.checks.push_back(make_check("kkt", kkt, tol));
    }

    {
        const double sum_pairs = std::accumulate(result.pair_rates.begin(), result.pair_rates.end(), 0.0);
        const double scale = std::max(1.0, std::abs(result.total_rate));
        const double residual = std::max(std::abs(result.total_rate - sum_pairs),
                                          std::abs(result.total_rate - closed_form_rate)) / scale;
        report.checks.push_back(make_check("rate-consistency", residual, tol));
    }

    report.checks.push_back(make_check(
        "pairing-optimality", std::max(0.0, best_pairing_exhaustive(channel, cfg).rate - result.total_rate), tol));

    {
        double worst = 0.0;
        for (PolicyId id : {PolicyId::OpaNoPairing, PolicyId::UniformWithPairing, PolicyId::UniformNoPairing}) {
            worst = std::max(worst, solve_policy(id, channel, cfg).total_rate - result.total_rate);
        }
        report.checks.push_back(make_check("dominance", std::max(0.0, worst), tol));
    }
    return report;
}

VerificationReport verify(const ChannelRealization& channel, const SystemConfig& cfg, double tol) {
    if (!(tol > 0.0)) {
        throw std::invalid_argument("tolerance must be positive");
    }
    if (channel.size() > kMaxExhaustiveSubcarriers) {
        throw std::invalid_argument("verification is capped at N = 8 subcarriers (exhaustive pairing search)");
    }
    return verify_result(channel, cfg, solve(channel, cfg), tol);
}

}  // namespace swipt::oracle
