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

#ifndef SWIPT_TESTS_TEST_SUPPORT_HPP
#define SWIPT_TESTS_TEST_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>

#include "swipt/model.hpp"

namespace swipt::testing {

/// Every noise term 1 dBm (destination total 1 dBm), eta = 1: the
/// configuration of the two-term plot with |h|^2 = |g|^2 = 0.9, P = 10 dBm.
inline SystemConfig single_pair_config() {
    SystemConfig cfg = default_config();
    cfg.n_subcarriers = 1;
    cfg.taps = 1;
    cfg.p_max = dbm_to_mw(10.0);
    return cfg;
}

inline SystemConfig config_with_n(std::size_t n) {
    SystemConfig cfg = default_config();
    cfg.n_subcarriers = n;
    cfg.taps = std::min<std::size_t>(cfg.taps, n);
    return cfg;
}

/// Independent exponential gains with random means; not the library's generator.
inline ChannelRealization random_channel(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> mean(0.05, 2.0);
    ChannelRealization ch;
    const double mh = mean(rng);
    const double mg = mean(rng);
    std::exponential_distribution<double> eh(1.0 / mh);
    std::exponential_distribution<double> eg(1.0 / mg);
    for (std::size_t i = 0; i < n; ++i) {
        ch.h_sq.push_back(eh(rng));
        ch.g_sq.push_back(eg(rng));
    }
    return ch;
}

inline double log_uniform(std::mt19937_64& rng, double lo, double hi) {
    std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
    return std::exp(u(rng));
}

}  // namespace swipt::testing

#endif  // SWIPT_TESTS_TEST_SUPPORT_HPP
