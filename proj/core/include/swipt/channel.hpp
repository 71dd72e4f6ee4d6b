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

#ifndef SWIPT_CHANNEL_HPP
#define SWIPT_CHANNEL_HPP

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "swipt/model.hpp"

namespace swipt {

/// Seedable 64-bit generator with derived, non-overlapping substreams.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard, so realizations are reproducible across toolchains. Normal
/// variates come from Box-Muller: exactly two uniforms per complex sample.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    /// Independent generator for `stream_id`; does not advance this one.
    Rng substream(std::uint64_t stream_id) const;

    std::uint64_t next_u64() { return engine_(); }
    /// Uniform on (0, 1].
    double uniform();
    /// Circularly-symmetric complex Gaussian with E|z|^2 = variance.
    std::complex<double> complex_normal(double variance);

    std::uint64_t seed() const noexcept { return seed_; }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Time-domain impulse response of one hop.
struct TapSet {
    std::vector<std::complex<double>> taps;
};

/// Per-tap variance 1 / (L (1 + d)^alpha).
double tap_variance(std::size_t taps, double distance, double alpha);

/// L i.i.d. CN(0, tap_variance) taps; consumes 2 L uniforms from `rng`.
TapSet draw_taps(Rng& rng, std::size_t taps, double distance, double alpha);

/// |sum_l t_l exp(-j 2 pi n l / N)|^2 for n = 0..N-1 (non-normalized DFT).
/// Throws std::invalid_argument when N < L.
std::vector<double> taps_to_subcarrier_gains(const TapSet& taps, std::size_t n_subcarriers);

/// Hop 1 at distance dr from substream 1, hop 2 at distance d0 - dr from
/// substream 2 of `seed`. Pure function of (cfg, seed).
ChannelRealization generate_channel(const SystemConfig& cfg, std::uint64_t seed);

}  // namespace swipt

#endif  // SWIPT_CHANNEL_HPP
