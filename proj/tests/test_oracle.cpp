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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "swipt/allocator.hpp"
#include "swipt/channel.hpp"
#include "swipt/oracle.hpp"
#include "test_support.hpp"

namespace swipt::oracle {
namespace {

using swipt::testing::config_with_n;
using swipt::testing::log_uniform;
using swipt::testing::random_channel;
using swipt::testing::single_pair_config;

SystemConfig random_noise_config(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> noise(0.1, 10.0);
    std::uniform_real_distribution<double> eta(0.0, 1.0);
    SystemConfig cfg = config_with_n(1);
    cfg.noise = NoiseProfile{noise(rng), noise(rng), noise(rng), noise(rng)};
    cfg.eta = 1.0 - eta(rng);  // (0, 1]
    return cfg;
}

TEST(RhoByBisection, SinglePairRoot) {
    EXPECT_NEAR(rho_by_bisection(0.9, single_pair_config(), 1e-9), 0.588403, 1e-6);
}

TEST(RhoByBisection, AgreesWithClosedForm) {
    std::mt19937_64 rng(30);
    std::uniform_real_distribution<double> gain(0.0, 5.0);
    for (int k = 0; k < 10000; ++k) {
        const SystemConfig cfg = random_noise_config(rng);
        const double g = 5.0 - gain(rng);  // (0, 5]
        const auto split = optimal_rho(g, cfg);
        ASSERT_TRUE(split);
        ASSERT_LE(std::abs(split->info - rho_by_bisection(g, cfg, 1e-13)), 1e-10);
    }
}

TEST(RhoByBisection, RootDoesNotDependOnPower) {
    std::mt19937_64 rng(31);
    for (int k = 0; k < 1000; ++k) {
        const SystemConfig cfg = random_noise_config(rng);
        const double g = log_uniform(rng, 1e-2, 5.0);
        ASSERT_NEAR(rho_by_bisection(g, cfg, 1e-14, 1.0), rho_by_bisection(g, cfg, 1e-14, 100.0), 1e-12);
    }
}

TEST(RhoByBisection, Errors) {
    const SystemConfig cfg = single_pair_config();
    EXPECT_THROW(rho_by_bisection(0.9, cfg, 0.0), std::invalid_argument);
    EXPECT_THROW(rho_by_bisection(0.9, cfg, 1.0), std::invalid_argument);
    EXPECT_THROW(rho_by_bisection(0.0, cfg, 1e-9), std::domain_error);
}

TEST(Exhaustive, SortedSymmetricInstanceIsIdentity) {
    const SystemConfig cfg = config_with_n(2);
    const auto best = best_pairing_exhaustive(ChannelRealization{{2, 1}, {2, 1}}, cfg);
    EXPECT_EQ(best.pairing, SubcarrierPairing::identity(2));
}

TEST(Exhaustive, SortedPairingIsOptimalForThreeSubcarriers) {
    std::mt19937_64 rng(32);
    const SystemConfig cfg = config_with_n(3);
    for (int k = 0; k < 1000; ++k) {
        const ChannelRealization ch = random_channel(rng, 3);
        ASSERT_LE(best_pairing_exhaustive(ch, cfg).rate - solve(ch, cfg).total_rate, 1e-9);
    }
}

TEST(Exhaustive, SortedWinsWhenOnlyOnePairIsActive) {
    // Budget below the activation threshold of the second pair in either pairing.
    SystemConfig cfg = config_with_n(2);
    cfg.p_max = 1e-3;
    const ChannelRealization ch{{2.0, 0.5}, {1.5, 0.2}};
    const auto sorted_result = solve(ch, cfg);
    EXPECT_EQ(sorted_result.powers[1], 0.0);
    const auto swapped = allocate_for_pairing(ch, cfg, SubcarrierPairing({1, 0}));
    EXPECT_TRUE(swapped.powers[0] == 0.0 || swapped.powers[1] == 0.0);

    const auto best = best_pairing_exhaustive(ch, cfg);
    EXPECT_EQ(best.pairing, SubcarrierPairing::identity(2));
    EXPECT_NEAR(best.rate, sorted_result.total_rate, 1e-15);
}

TEST(Exhaustive, TiesResolveToSmallestPermutation) {
    const SystemConfig cfg = config_with_n(3);
    const ChannelRealization ch{{1, 1, 1}, {1, 1, 1}};
    EXPECT_EQ(best_pairing_exhaustive(ch, cfg).pairing, SubcarrierPairing::identity(3));
}

TEST(Exhaustive, DeadChannelRatesZero) {
    const SystemConfig cfg = config_with_n(2);
    EXPECT_EQ(best_pairing_exhaustive(ChannelRealization{{0, 0}, {1, 1}}, cfg).rate, 0.0);
}

TEST(Exhaustive, RejectsMoreThanEightSubcarriers) {
    const SystemConfig cfg = config_with_n(9);
    const ChannelRealization ch{std::vector<double>(9, 1.0), std::vector<double>(9, 1.0)};
    EXPECT_THROW(best_pairing_exhaustive(ch, cfg), std::invalid_argument);
}

TEST(PowerByGrid, EqualGainsSplitEvenly) {
    const auto p = power_by_grid({0.8, 0.8}, 10.0, 1000);
    EXPECT_NEAR(p[0], 5.0, 10.0 / 1000);
    EXPECT_DOUBLE_EQ(p[0] + p[1], 10.0);
}

TEST(PowerByGrid, MatchesWaterfill) {
    std::mt19937_64 rng(33);
    for (int k = 0; k < 1000; ++k) {
        const std::array<double, 2> gammas{log_uniform(rng, 1e-2, 1e2), log_uniform(rng, 1e-2, 1e2)};
        const double p_max = log_uniform(rng, 1e-1, 1e2);
        constexpr std::size_t kRes = 1000;
        const auto grid = power_by_grid(gammas, p_max, kRes);
        const auto wf = waterfill(gammas, p_max);
        ASSERT_LE(std::abs(grid[0] - wf[0]), p_max / kRes) << gammas[0] << " " << gammas[1] << " " << p_max;
    }
}

TEST(PowerByGrid, InteriorCaseMatchesClosedForm) {
    std::mt19937_64 rng(34);
    int checked = 0;
    while (checked < 1000) {
        const std::array<double, 2> gammas{log_uniform(rng, 1e-1, 1e1), log_uniform(rng, 1e-1, 1e1)};
        const double p_max = log_uniform(rng, 1.0, 1e2);
        const auto interior = two_channel_interior_powers(gammas, p_max);
        if (!(interior[0] > 0.0 && interior[1] > 0.0)) continue;
        ++checked;
        const auto wf = waterfill(gammas, p_max);
        ASSERT_NEAR(wf[0], interior[0], 1e-6);
        const auto grid = power_by_grid(gammas, p_max, 100000);
        ASSERT_LE(std::abs(grid[0] - interior[0]), p_max / 100000);
    }
}

// Two-subcarrier exchange argument. With gamma(i, j) = H_i G_j, where
// H = h_sq and G = rho / (rho sra + srb) at the optimal split of g, sorted
// pairing maximizes (1 + gamma_1 P_1)(1 + gamma_2 P_2) in every power regime.
struct ExchangeSample {
    double h1, h2, g1, g2, p_max;
};

double exchange_gap(const ExchangeSample& s, const SystemConfig& cfg, int& regime) {
    auto G = [&](double g) {
        const double rho = optimal_rho(g, cfg)->info;
        return rho / (rho * cfg.noise.sigma_ra_sq + cfg.noise.sigma_rb_sq);
    };
    const double H1 = s.h1, H2 = s.h2, G1 = G(s.g1), G2 = G(s.g2);
    const std::array<double, 2> sorted{H1 * G1, H2 * G2};
    const std::array<double, 2> crossed{H1 * G2, H2 * G1};
    const auto p = waterfill(sorted, s.p_max);
    const auto q = waterfill(crossed, s.p_max);
    const int active = (p[1] > 0.0) + (q[1] > 0.0 && q[0] > 0.0);
    regime = active == 2 ? 1 : active == 0 ? 2 : 3;
    const double lhs = H1 * G1 * p[0] + H2 * G2 * p[1] + H1 * G1 * H2 * G2 * p[0] * p[1];
    const double rhs = H1 * G2 * q[0] + H2 * G1 * q[1] + H1 * G2 * H2 * G1 * q[0] * q[1];
    if (regime == 1) {
        // Both pairings interior: the gap has a closed form.
        const double expected = 0.5 * (H1 - H2) * (G1 - G2) * s.p_max +
                                (H1 * H1 - H2 * H2) * (G1 * G1 - G2 * G2) / (4.0 * H1 * G1 * H2 * G2);
        EXPECT_NEAR(lhs - rhs, expected, 1e-9 * std::max(1.0, std::abs(expected)));
    }
    return (lhs - rhs) / std::max(1.0, std::abs(lhs));
}

TEST(ExchangeArgument, SortedProductDominatesInAllRegimes) {
    std::mt19937_64 rng(35);
    const SystemConfig cfg = default_config();
    std::array<int, 4> seen{};
    for (int k = 0; k < 30000; ++k) {
        ExchangeSample s{log_uniform(rng, 1e-2, 1e1), log_uniform(rng, 1e-2, 1e1), log_uniform(rng, 1e-2, 1e1),
                         log_uniform(rng, 1e-2, 1e1), log_uniform(rng, 1e-2, 1e3)};
        if (s.h1 < s.h2) std::swap(s.h1, s.h2);
        if (s.g1 < s.g2) std::swap(s.g1, s.g2);
        int regime = 0;
        ASSERT_GT(exchange_gap(s, cfg, regime), -1e-12);
        ++seen[regime];
    }
    EXPECT_GT(seen[1], 100);
    EXPECT_GT(seen[2], 100);
    EXPECT_GT(seen[3], 100);
}

TEST(Verify, SinglePairInstancePasses) {
    const auto report = verify(ChannelRealization{{0.9}, {0.9}}, single_pair_config(), 1e-9);
    EXPECT_TRUE(report.all_pass());
    for (const char* name : {"equal-rate", "root-bounds", "rho-vs-bisection", "monotonicity-in-b", "power-budget",
                             "nonnegative-power", "kkt", "rate-consistency", "pairing-optimality", "dominance"}) {
        ASSERT_NE(report.find(name), nullptr) << name;
    }
    EXPECT_EQ(report.find("no-such-check"), nullptr);
}

TEST(Verify, CorruptedSplitFailsEqualRate) {
    const SystemConfig cfg = single_pair_config();
    const ChannelRealization ch{{0.9}, {0.9}};
    AllocationResult r = solve(ch, cfg);
    r.rho_i[0] += 0.1;
    const auto report = verify_result(ch, cfg, r, 1e-9);
    EXPECT_FALSE(report.all_pass());
    const CheckResult* eq = report.find("equal-rate");
    ASSERT_NE(eq, nullptr);
    EXPECT_FALSE(eq->pass);
    EXPECT_GT(eq->residual, 1e-3);
    EXPECT_FALSE(report.find("rho-vs-bisection")->pass);
}

TEST(Verify, OverspentBudgetFails) {
    const SystemConfig cfg = config_with_n(2);
    const ChannelRealization ch{{1.0, 0.5}, {0.7, 0.3}};
    AllocationResult r = solve(ch, cfg);
    r.powers[0] += 1.0;
    EXPECT_FALSE(verify_result(ch, cfg, r, 1e-9).find("power-budget")->pass);
}

TEST(Verify, DefaultConfigHundredSeeds) {
    const SystemConfig cfg = default_config();
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const auto report = verify(generate_channel(cfg, seed), cfg, 1e-9);
        for (const auto& c : report.checks) {
            ASSERT_TRUE(c.pass) << "seed " << seed << " " << c.name << " residual " << c.residual;
        }
    }
}

TEST(Verify, Errors) {
    const SystemConfig cfg = config_with_n(9);
    const ChannelRealization big{std::vector<double>(9, 1.0), std::vector<double>(9, 1.0)};
    EXPECT_THROW(verify(big, cfg, 1e-9), std::invalid_argument);
    const ChannelRealization one{{0.9}, {0.9}};
    try {
        verify(one, single_pair_config(), 0.0);
        FAIL();
    } catch (const std::invalid_argument& e) {
        EXPECT_STREQ(e.what(), "tolerance must be positive");
    }
}

}  // namespace
}  // namespace swipt::oracle
