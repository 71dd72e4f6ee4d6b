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
#include <sstream>
#include <string>

#include "swipt/allocator.hpp"
#include "swipt/channel.hpp"
#include "swipt/montecarlo.hpp"

namespace swipt {
namespace {

const std::vector<PolicyId> kEveryPolicy(kAllPolicies.begin(), kAllPolicies.end());

TEST(SweepVariableNames, RoundTrip) {
    for (auto v : {SweepVariable::PMaxDbm, SweepVariable::RelayPosition}) {
        EXPECT_EQ(parse_sweep_variable(sweep_variable_name(v)), v);
    }
    EXPECT_EQ(sweep_variable_name(SweepVariable::PMaxDbm), "p_max_dbm");
    EXPECT_EQ(sweep_variable_name(SweepVariable::RelayPosition), "relay_position");
    EXPECT_FALSE(parse_sweep_variable("p_max"));
}

TEST(Stats, OrderedMeanAndSampleStd) {
    const std::vector<double> xs{1.0, 2.0, 3.0, 4.0};
    EXPECT_DOUBLE_EQ(ordered_mean(xs), 2.5);
    EXPECT_DOUBLE_EQ(sample_std(xs), std::sqrt(5.0 / 3.0));
    const std::vector<double> one{7.0};
    EXPECT_EQ(sample_std(one), 0.0);
    EXPECT_EQ(ordered_mean(std::vector<double>{}), 0.0);
}

TEST(Stats, PairedStandardError) {
    const std::vector<double> a{2.0, 3.0, 5.0};
    const std::vector<double> b{1.0, 1.0, 1.0};
    // differences 1, 2, 4
    EXPECT_DOUBLE_EQ(paired_standard_error(a, b), std::sqrt(7.0 / 3.0) / std::sqrt(3.0));
    EXPECT_EQ(paired_standard_error(a, a), 0.0);
    EXPECT_THROW(paired_standard_error(a, std::vector<double>{1.0}), std::invalid_argument);
}

TEST(ChannelHash, SensitiveToEveryGain) {
    const ChannelRealization ch{{1.0, 2.0}, {3.0, 4.0}};
    ChannelRealization other = ch;
    EXPECT_EQ(channel_hash(ch), channel_hash(other));
    other.g_sq[1] = std::nextafter(4.0, 5.0);
    EXPECT_NE(channel_hash(ch), channel_hash(other));
    const ChannelRealization swapped{{3.0, 4.0}, {1.0, 2.0}};
    EXPECT_NE(channel_hash(ch), channel_hash(swapped));
}

TEST(RunTrials, SingleTrialMatchesDirectSolve) {
    const SystemConfig cfg = default_config();
    const TrialBatch batch = run_trials(cfg, kEveryPolicy, 1, 77);
    const ChannelRealization ch = generate_channel(cfg, 78);
    EXPECT_EQ(batch.channel_hashes[0], channel_hash(ch));
    for (PolicyId id : kAllPolicies) {
        EXPECT_EQ(batch.rates_for(id)[0], solve_policy(id, ch, cfg).total_rate) << policy_name(id);
    }
    EXPECT_EQ(batch.dead_trials, 0u);
}

TEST(RunTrials, TrialSeedsAreConsecutive) {
    const SystemConfig cfg = default_config();
    const TrialBatch batch = run_trials(cfg, std::vector<PolicyId>{PolicyId::Proposed}, 5, 100);
    for (std::size_t t = 0; t < 5; ++t) {
        EXPECT_EQ(batch.channel_hashes[t], channel_hash(generate_channel(cfg, 100 + t + 1)));
    }
}

TEST(RunTrials, IdenticalAcrossThreadCounts) {
    const SystemConfig cfg = default_config();
    const TrialBatch one = run_trials(cfg, kEveryPolicy, 300, 5, RunOptions{1});
    const TrialBatch four = run_trials(cfg, kEveryPolicy, 300, 5, RunOptions{4});
    const TrialBatch again = run_trials(cfg, kEveryPolicy, 300, 5, RunOptions{4});
    EXPECT_EQ(one.rates, four.rates);
    EXPECT_EQ(one.channel_hashes, four.channel_hashes);
    EXPECT_EQ(four.rates, again.rates);
}

TEST(RunTrials, ProposedMeanDominates) {
    const SystemConfig cfg = default_config();
    const TrialBatch batch = run_trials(cfg, kEveryPolicy, 2000, 1);
    const double proposed = ordered_mean(batch.rates_for(PolicyId::Proposed));
    for (PolicyId id : {PolicyId::OpaNoPairing, PolicyId::UniformWithPairing, PolicyId::UniformNoPairing}) {
        EXPECT_GE(proposed, ordered_mean(batch.rates_for(id))) << policy_name(id);
    }
}

TEST(RunTrials, NoHarvestingCountsDeadTrials) {
    SystemConfig cfg = default_config();
    cfg.eta = 0.0;
    const TrialBatch batch =
        run_trials(cfg, std::vector<PolicyId>{PolicyId::Proposed, PolicyId::ConventionalNonEH}, 10, 3);
    EXPECT_EQ(batch.dead_trials, 10u);
    for (double r : batch.rates_for(PolicyId::Proposed)) EXPECT_EQ(r, 0.0);
    for (double r : batch.rates_for(PolicyId::ConventionalNonEH)) EXPECT_GT(r, 0.0);
}

TEST(RunTrials, Errors) {
    const SystemConfig cfg = default_config();
    EXPECT_THROW(run_trials(cfg, kEveryPolicy, 0, 1), std::invalid_argument);
    const TrialBatch batch = run_trials(cfg, std::vector<PolicyId>{PolicyId::Proposed}, 1, 1);
    EXPECT_THROW(batch.rates_for(PolicyId::ConventionalNonEH), std::out_of_range);
}

TEST(Sweep, ValidateRejectsBadSpecs) {
    SweepSpec spec;
    spec.values = {10, 20};
    spec.policies = {PolicyId::Proposed};
    EXPECT_NO_THROW(validate_sweep(spec));

    SweepSpec dup = spec;
    dup.values = {10, 10};
    try {
        validate_sweep(dup);
        FAIL();
    } catch (const std::invalid_argument& e) {
        EXPECT_STREQ(e.what(), "values must be strictly increasing");
    }
    SweepSpec empty = spec;
    empty.values.clear();
    EXPECT_THROW(validate_sweep(empty), std::invalid_argument);
    SweepSpec zero = spec;
    zero.trials = 0;
    EXPECT_THROW(validate_sweep(zero), std::invalid_argument);
    SweepSpec none = spec;
    none.policies.clear();
    EXPECT_THROW(validate_sweep(none), std::invalid_argument);
}

TEST(Sweep, SinglePointMatchesRunTrials) {
    SystemConfig cfg = default_config();
    SweepSpec spec;
    spec.variable = SweepVariable::PMaxDbm;
    spec.values = {20.0};
    spec.trials = 50;
    spec.seed = 9;
    spec.policies = kEveryPolicy;
    const SweepResult result = sweep(cfg, spec);
    cfg.p_max = dbm_to_mw(20.0);
    const TrialBatch batch = run_trials(cfg, kEveryPolicy, 50, 9);
    ASSERT_EQ(result.rows.size(), kAllPolicies.size());
    for (std::size_t p = 0; p < kAllPolicies.size(); ++p) {
        const SweepRow& row = result.rows[p];
        EXPECT_EQ(row.policy, kAllPolicies[p]);
        EXPECT_EQ(row.samples, batch.rates[p]);
        EXPECT_EQ(row.mean, ordered_mean(batch.rates[p]));
        EXPECT_EQ(row.std_dev, sample_std(batch.rates[p]));
        EXPECT_EQ(row.trials, 50u);
        EXPECT_EQ(row.seed, 9u);
        EXPECT_DOUBLE_EQ(row.std_error(), row.std_dev / std::sqrt(50.0));
    }
}

TEST(Sweep, PointsUseStridedSeedsAndRelayPosition) {
    SystemConfig cfg = default_config();
    cfg.d0 = 2.0;
    SweepSpec spec;
    spec.variable = SweepVariable::RelayPosition;
    spec.values = {0.25, 0.75};
    spec.trials = 20;
    spec.seed = 4;
    spec.policies = {PolicyId::Proposed};
    const SweepResult result = sweep(cfg, spec);
    ASSERT_EQ(result.rows.size(), 2u);
    EXPECT_EQ(result.rows[1].seed, 4u + kPointSeedStride);

    SystemConfig point = cfg;
    point.dr = 0.75 * 2.0;
    const TrialBatch batch = run_trials(point, spec.policies, 20, 4 + kPointSeedStride);
    EXPECT_EQ(result.at(0.75, PolicyId::Proposed).samples, batch.rates[0]);
    EXPECT_THROW(result.at(0.5, PolicyId::Proposed), std::out_of_range);
}

TEST(Sweep, InvalidPointIsAConfigError) {
    SweepSpec spec;
    spec.variable = SweepVariable::RelayPosition;
    spec.values = {0.5, 1.0};
    spec.trials = 1;
    spec.policies = {PolicyId::Proposed};
    EXPECT_THROW(sweep(default_config(), spec), ConfigError);
}

TEST(Sweep, PowerSweepIsIncreasing) {
    SweepSpec spec;
    spec.values = {10, 20, 30, 40};
    spec.trials = 300;
    spec.policies = kEveryPolicy;
    const SweepResult result = sweep(default_config(), spec);
    for (PolicyId id : kAllPolicies) {
        for (std::size_t k = 1; k < spec.values.size(); ++k) {
            EXPECT_GT(result.at(spec.values[k], id).mean, result.at(spec.values[k - 1], id).mean) << policy_name(id);
        }
    }
}

TEST(Csv, HeaderBannerAndRows) {
    SweepSpec spec;
    spec.values = {10, 20};
    spec.trials = 3;
    spec.policies = {PolicyId::Proposed, PolicyId::ConventionalNonEH};
    const SweepResult result = sweep(default_config(), spec);

    const std::string plain = sweep_to_csv(result, false);
    std::istringstream in(plain);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "sweep_variable,sweep_value,policy,mean_rate_bps_hz,std_rate,trials,seed");
    std::getline(in, line);
    EXPECT_EQ(line.rfind("p_max_dbm,10,proposed,", 0), 0u) << line;
    EXPECT_EQ(line.substr(line.size() - 4), ",3,1");
    int rows = 1;
    while (std::getline(in, line)) ++rows;
    EXPECT_EQ(rows, 4);

    const std::string banner = sweep_to_csv(result, true);
    EXPECT_EQ(banner, "# swipt-relay " + std::string(library_version()) + "\n" + plain);
    EXPECT_EQ(plain, sweep_to_csv(sweep(default_config(), spec), false));
}

TEST(Csv, RoundTripsDoubles) {
    SweepSpec spec;
    spec.values = {15};
    spec.trials = 7;
    spec.policies = {PolicyId::Proposed};
    const SweepResult result = sweep(default_config(), spec);
    const std::string csv = sweep_to_csv(result, false);
    const std::string row = csv.substr(csv.find('\n') + 1);
    std::istringstream fields(row);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(fields, cell, ',')) cells.push_back(cell);
    ASSERT_EQ(cells.size(), 7u);
    EXPECT_EQ(std::stod(cells[3]), result.rows[0].mean);
    EXPECT_EQ(std::stod(cells[4]), result.rows[0].std_dev);
}

}  // namespace
}  // namespace swipt
