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

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "swipt/allocator.hpp"
#include "swipt/baselines.hpp"
#include "swipt/channel.hpp"
#include "swipt/io.hpp"
#include "swipt/montecarlo.hpp"
#include "swipt/oracle.hpp"

namespace swipt::cli {

namespace {

struct SolveArgs {
    std::string config;
    std::uint64_t seed = 42;
    std::string channel;
    std::string policy = "proposed";
    std::string output = "-";
};

struct SweepArgs {
    std::string config;
    std::string variable;
    std::string values;
    std::size_t trials = 2000;
    std::uint64_t seed = 1;
    std::string policies = "proposed,opa-nopair,uniform-pair,uniform-nopair,conventional";
    std::string output = "-";
    bool no_banner = false;
    unsigned threads = 0;
};

struct VerifyArgs {
    std::string config;
    std::size_t seeds = 100;
    std::uint64_t seed = 1;
    double tol = 1e-9;
    std::string channel;
    std::string json;
};

struct ChannelsArgs {
    std::string config;
    std::size_t trials = 10;
    std::uint64_t seed = 1;
    std::string output = "-";
};

// Error carrying the exit code it should map to.
struct Failure {
    int code;
    std::string message;
};

SystemConfig load_or_default(const std::string& path) {
    try {
        return path.empty() ? default_config() : load_config(path);
    } catch (const IoError& e) {
        throw Failure{kIoFailure, e.what()};
    } catch (const ConfigError& e) {
        throw Failure{kInvalidInput, e.what()};
    }
}

ChannelRealization load_override(const std::string& path, const SystemConfig& cfg) {
    ChannelRealization channel;
    try {
        channel = load_channel(path);
    } catch (const IoError& e) {
        throw Failure{kIoFailure, e.what()};
    } catch (const ConfigError& e) {
        throw Failure{kInvalidInput, e.what()};
    }
    if (channel.size() != cfg.n_subcarriers) {
        throw Failure{kInvalidInput, fmt::format("channel override has {} subcarriers but config has n_subcarriers = {}",
                                                 channel.size(), cfg.n_subcarriers)};
    }
    return channel;
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
    if (path == "-") {
        out << text;
        return;
    }
    try {
        write_text_file(path, text);
    } catch (const IoError& e) {
        throw Failure{kIoFailure, e.what()};
    }
}

std::vector<PolicyId> parse_policies(const std::string& text) {
    std::vector<PolicyId> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto id = parse_policy(item);
        if (!id) {
            throw Failure{kInvalidInput,
                          fmt::format("unknown policy '{}'; valid names: {}", item, valid_policy_names())};
        }
        if (std::find(out.begin(), out.end(), *id) == out.end()) out.push_back(*id);
    }
    if (out.empty()) {
        throw Failure{kInvalidInput, fmt::format("no policies given; valid names: {}", valid_policy_names())};
    }
    return out;
}

int cmd_solve(const SolveArgs& a, std::ostream& out) {
    const SystemConfig cfg = load_or_default(a.config);
    const auto policy = parse_policies(a.policy);
    if (policy.size() != 1) {
        throw Failure{kInvalidInput, "solve takes exactly one policy"};
    }
    const ChannelRealization channel = a.channel.empty() ? generate_channel(cfg, a.seed) : load_override(a.channel, cfg);
    AllocationResult result;
    try {
        result = solve_policy(policy.front(), channel, cfg);
    } catch (const NoUsablePair& e) {
        throw Failure{kInvalidInput, e.what()};
    }
    emit(a.output, allocation_to_json(result), out);
    return kOk;
}

int cmd_sweep(const SweepArgs& a, std::ostream& out) {
    const SystemConfig cfg = load_or_default(a.config);
    SweepSpec spec;
    const auto variable = parse_sweep_variable(a.variable);
    if (!variable) {
        throw Failure{kInvalidInput, "unknown --variable; expected p_max_dbm or relay_position"};
    }
    spec.variable = *variable;
    try {
        spec.values = parse_values(a.values);
    } catch (const std::invalid_argument& e) {
        throw Failure{kInvalidInput, e.what()};
    }
    spec.trials = a.trials;
    spec.seed = a.seed;
    spec.policies = parse_policies(a.policies);
    SweepResult result;
    try {
        validate_sweep(spec);
        result = sweep(cfg, spec, RunOptions{a.threads});
    } catch (const ConfigError& e) {
        throw Failure{kInvalidInput, e.what()};
    } catch (const std::invalid_argument& e) {
        throw Failure{kInvalidInput, e.what()};
    }
    emit(a.output, sweep_to_csv(result, !a.no_banner), out);
    return kOk;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    if (!(a.tol > 0.0)) {
        throw Failure{kInvalidInput, "tolerance must be positive"};
    }
    const SystemConfig cfg = load_or_default(a.config);
    if (cfg.n_subcarriers > oracle::kMaxExhaustiveSubcarriers) {
        throw Failure{kInvalidInput,
                      fmt::format("verify enumerates all N! pairings and is capped at N = {} (config has N = {})",
                                  oracle::kMaxExhaustiveSubcarriers, cfg.n_subcarriers)};
    }

    std::vector<ChannelRealization> instances;
    if (!a.channel.empty()) {
        instances.push_back(load_override(a.channel, cfg));
    } else {
        for (std::size_t s = 0; s < a.seeds; ++s) instances.push_back(generate_channel(cfg, a.seed + s));
    }

    // Aggregate per check: every instance must pass, report the worst residual.
    std::vector<std::string> order;
    std::map<std::string, oracle::CheckResult> merged;
    std::map<std::string, std::size_t> passed;
    auto absorb = [&](const oracle::CheckResult& c) {
        if (!merged.contains(c.name)) {
            order.push_back(c.name);
            merged[c.name] = oracle::CheckResult{c.name, true, 0.0, c.tolerance};
        }
        auto& m = merged[c.name];
        m.pass = m.pass && c.pass;
        m.residual = std::max(m.residual, c.residual);
        if (c.pass) ++passed[c.name];
    };
    for (const auto& channel : instances) {
        try {
            for (const auto& c : oracle::verify(channel, cfg, a.tol).checks) absorb(c);
            absorb({"solvable", true, 0.0, 0.0});
        } catch (const NoUsablePair&) {
            absorb({"solvable", false, 1.0, 0.0});
        }
    }

    oracle::VerificationReport aggregate;
    out << fmt::format("{:<20} {:>9} {:>14} {:>10}  {}\n", "check", "passed", "max_residual", "tolerance", "status");
    for (const auto& name : order) {
        const auto& c = merged[name];
        aggregate.checks.push_back(c);
        out << fmt::format("{:<20} {:>4}/{:<4} {:>14.3e} {:>10.1e}  {}\n", name, passed[name], instances.size(),
                           c.residual, c.tolerance, c.pass ? "PASS" : "FAIL");
    }
    if (!a.json.empty()) {
        emit(a.json, report_to_json(aggregate), out);
    }
    return aggregate.all_pass() ? kOk : kVerificationFailed;
}

int cmd_channels(const ChannelsArgs& a, std::ostream& out) {
    const SystemConfig cfg = load_or_default(a.config);
    std::ostringstream csv;
    write_channel_csv_header(csv);
    for (std::size_t t = 1; t <= a.trials; ++t) {
        write_channel_csv_rows(csv, t, generate_channel(cfg, a.seed + t));
    }
    emit(a.output, csv.str(), out);
    return kOk;
}

double parse_number(const std::string& text) {
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a number: '" + text + "'");
    }
    if (used != text.size() || !std::isfinite(value)) {
        throw std::invalid_argument("not a number: '" + text + "'");
    }
    return value;
}

}  // namespace

std::vector<double> parse_values(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto dots = item.find("..");
        if (dots == std::string::npos) {
            out.push_back(parse_number(item));
            continue;
        }
        const double start = parse_number(item.substr(0, dots));
        std::string rest = item.substr(dots + 2);
        double step = 1.0;
        if (const auto colon = rest.find(':'); colon != std::string::npos) {
            step = parse_number(rest.substr(colon + 1));
            rest = rest.substr(0, colon);
        }
        const double stop = parse_number(rest);
        if (!(step > 0.0) || stop < start) {
            throw std::invalid_argument("range '" + item + "' needs start <= stop and a positive step");
        }
        const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
        for (std::size_t k = 0; k < count; ++k) {
            // Round away accumulated binary noise (0.1 + 2 * 0.1 -> 0.3).
            out.push_back(std::stod(fmt::format("{:.12g}", start + static_cast<double>(k) * step)));
        }
    }
    if (out.empty()) {
        throw std::invalid_argument("no values given");
    }
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Resource allocation for two-hop OFDM decode-and-forward relays with an "
                 "energy-harvesting (power-splitting) relay",
                 "swipt-relay"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(library_version()));

    SolveArgs solve_args;
    auto* solve_cmd = app.add_subcommand("solve", "Allocate one channel and print the result as JSON");
    solve_cmd->add_option("-c,--config", solve_args.config, "System config JSON (defaults when omitted)");
    solve_cmd->add_option("-s,--seed", solve_args.seed, "Channel seed")->capture_default_str();
    solve_cmd->add_option("--channel", solve_args.channel,
                          "Fixed channel JSON {\"h_sq\": [...], \"g_sq\": [...]}; bypasses the generator");
    solve_cmd->add_option("-p,--policy", solve_args.policy,
                          "Policy: " + valid_policy_names())->capture_default_str();
    solve_cmd->add_option("-o,--output", solve_args.output, "Output path, - for stdout")->capture_default_str();

    SweepArgs sweep_args;
    auto* sweep_cmd = app.add_subcommand("sweep", "Monte-Carlo sweep over P_max or relay position; writes CSV");
    sweep_cmd->add_option("-c,--config", sweep_args.config, "System config JSON (defaults when omitted)");
    sweep_cmd->add_option("--variable", sweep_args.variable, "p_max_dbm or relay_position")->required();
    sweep_cmd->add_option("--values", sweep_args.values,
                          "Strictly increasing points: 10,20,30 or start..stop:step")->required();
    sweep_cmd->add_option("-n,--trials", sweep_args.trials, "Trials per point")
        ->capture_default_str()->check(CLI::PositiveNumber);
    sweep_cmd->add_option("-s,--seed", sweep_args.seed, "Master seed")->capture_default_str();
    sweep_cmd->add_option("--policies", sweep_args.policies, "Comma-separated policy names")->capture_default_str();
    sweep_cmd->add_option("-o,--output", sweep_args.output, "Output path, - for stdout")->capture_default_str();
    sweep_cmd->add_flag("--no-banner", sweep_args.no_banner, "Omit the leading '# swipt-relay <version>' line");
    sweep_cmd->add_option("-j,--threads", sweep_args.threads, "Worker threads, 0 = all cores")->capture_default_str();

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "Check the allocator against the brute-force oracles");
    verify_cmd->add_option("-c,--config", verify_args.config, "System config JSON (defaults when omitted)");
    verify_cmd->add_option("--seeds", verify_args.seeds, "Number of random channels")->capture_default_str();
    verify_cmd->add_option("-s,--seed", verify_args.seed, "First channel seed")->capture_default_str();
    verify_cmd->add_option("--tol", verify_args.tol, "Tolerance for every check")->capture_default_str();
    verify_cmd->add_option("--channel", verify_args.channel, "Verify one fixed channel JSON instead of seeds");
    verify_cmd->add_option("--json", verify_args.json, "Also write the report as JSON to this path");

    ChannelsArgs channels_args;
    auto* channels_cmd = app.add_subcommand("channels", "Dump generated channels as CSV (trial,subcarrier,h_sq,g_sq)");
    channels_cmd->add_option("-c,--config", channels_args.config, "System config JSON (defaults when omitted)");
    channels_cmd->add_option("-n,--trials", channels_args.trials, "Number of channels")->capture_default_str();
    channels_cmd->add_option("-s,--seed", channels_args.seed, "Master seed; trial t uses seed + t")
        ->capture_default_str();
    channels_cmd->add_option("-o,--output", channels_args.output, "Output path, - for stdout")->capture_default_str();

    std::vector<const char*> argv;
    argv.push_back("swipt-relay");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInvalidInput;
    }

    try {
        if (solve_cmd->parsed()) return cmd_solve(solve_args, out);
        if (sweep_cmd->parsed()) return cmd_sweep(sweep_args, out);
        if (verify_cmd->parsed()) return cmd_verify(verify_args, out);
        if (channels_cmd->parsed()) return cmd_channels(channels_args, out);
    } catch (const Failure& f) {
        err << "error: " << f.message << "\n";
        return f.code;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidInput;
    }
    return kInvalidInput;
}

}  // namespace swipt::cli
