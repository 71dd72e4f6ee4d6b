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

#include "swipt/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace swipt {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

Rng Rng::substream(std::uint64_t stream_id) const {
    return Rng(splitmix64(seed_ ^ splitmix64(stream_id + 0x632be59bd9b4e019ULL)));
}

double Rng::uniform() {
    // 53 random mantissa bits, shifted from [0,1) to (0,1] so log() is safe.
    return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
}

std::complex<double> Rng::complex_normal(double variance) {
    const double u1 = uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-std::log(u1) * variance);
    const double angle = 2.0 * std::numbers::pi * u2;
    return {radius * std::cos(angle), radius * std::sin(angle)};
}

double tap_variance(std::size_t taps, double distance, double alpha) {
    return 1.0 / (static_cast<double>(taps) * std::pow(1.0 + distance, alpha));
}

TapSet draw_taps(Rng& rng, std::size_t taps, double distance, double alpha) {
    if (taps < 1 || !(distance >= 0.0)) {
        throw std::invalid_argument("draw_taps needs L >= 1 and d >= 0");
    }
    const double variance = tap_variance(taps, distance, alpha);
    TapSet out;
    out.taps.reserve(taps);
    for (std::size_t l = 0; l < taps; ++l) {
        out.taps.push_back(rng.complex_normal(variance));
    }
    return out;
}

std::vector<double> taps_to_subcarrier_gains(const TapSet& taps, std::size_t n_subcarriers) {
    const std::size_t n_taps = taps.taps.size();
    if (n_subcarriers < n_taps) {
        throw std::invalid_argument("subcarrier count must be at least the tap count");
    }
    std::vector<double> gains(n_subcarriers);
    for (std::size_t n = 0; n < n_subcarriers; ++n) {
        std::complex<double> acc{0.0, 0.0};
        for (std::size_t l = 0; l < n_taps; ++l) {
            // Reduce n*l mod N first so the phase stays exact for large N.
            const auto k = static_cast<double>((n * l) % n_subcarriers);
            const double phase = -2.0 * std::numbers::pi * k / static_cast<double>(n_subcarriers);
            acc += taps.taps[l] * std::polar(1.0, phase);
        }
        gains[n] = std::norm(acc);
    }
    return gains;
}

ChannelRealization generate_channel(const SystemConfig& cfg, std::uint64_t seed) {
    const Rng master(seed);
    Rng first_hop = master.substream(1);
    Rng second_hop = master.substream(2);
    ChannelRealization out;
    out.h_sq = taps_to_subcarrier_gains(draw_taps(first_hop, cfg.taps, cfg.dr, cfg.alpha), cfg.n_subcarriers);
    out.g_sq = taps_to_subcarrier_gains(draw_taps(second_hop, cfg.taps, cfg.d0 - cfg.dr, cfg.alpha),
                                        cfg.n_subcarriers);
    return out;
}

}  // namespace swipt
