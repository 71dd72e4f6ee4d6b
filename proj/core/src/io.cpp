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

#include "swipt/io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

namespace swipt {

using nlohmann::json;

namespace {

[[noreturn]] void reject(std::string field, std::string message) {
    throw ConfigError({ConfigViolation{std::move(field), std::move(message)}});
}

json parse_object(std::string_view text, std::string_view what) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        reject(std::string(what), std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        reject(std::string(what), "top level must be a JSON object");
    }
    return doc;
}

double number(const json& doc, const std::string& key, const std::string& field) {
    if (!doc.at(key).is_number()) {
        reject(field, "must be a number");
    }
    return doc.at(key).get<double>();
}

std::size_t read_count(const json& doc, const std::string& key) {
    const json& v = doc.at(key);
    if (!v.is_number_integer() || v.get<long long>() < 0) {
        reject(key, "must be a nonnegative integer");
    }
    return v.get<std::size_t>();
}

std::vector<double> gains(const json& doc, const std::string& key) {
    if (!doc.contains(key) || !doc.at(key).is_array()) {
        reject(key, "must be an array of numbers");
    }
    std::vector<double> out;
    for (const auto& v : doc.at(key)) {
        if (!v.is_number()) reject(key, "must be an array of numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

json finite_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

}  // namespace

SystemConfig config_from_json(std::string_view text) {
    const json doc = parse_object(text, "config");
    static const std::set<std::string> kKeys = {"n_subcarriers", "p_max_mw", "p_max_dbm", "eta", "d0",
                                                "dr", "alpha", "taps", "noise"};
    static const std::set<std::string> kNoiseKeys = {"sigma_ra_sq", "sigma_rb_sq", "sigma_da_sq", "sigma_db_sq"};
    for (const auto& [key, value] : doc.items()) {
        if (!kKeys.contains(key)) reject(key, "unknown field");
    }

    SystemConfig cfg = default_config();
    if (doc.contains("n_subcarriers")) cfg.n_subcarriers = read_count(doc, "n_subcarriers");
    if (doc.contains("taps")) cfg.taps = read_count(doc, "taps");
    if (doc.contains("p_max_mw")) {
        cfg.p_max = number(doc, "p_max_mw", "p_max_mw");
    } else if (doc.contains("p_max_dbm")) {
        const double dbm = number(doc, "p_max_dbm", "p_max_dbm");
        if (!std::isfinite(dbm)) reject("p_max_dbm", "must be finite");
        cfg.p_max = dbm_to_mw(dbm);
    }
    if (doc.contains("eta")) cfg.eta = number(doc, "eta", "eta");
    if (doc.contains("d0")) cfg.d0 = number(doc, "d0", "d0");
    if (doc.contains("dr")) cfg.dr = number(doc, "dr", "dr");
    if (doc.contains("alpha")) cfg.alpha = number(doc, "alpha", "alpha");
    if (doc.contains("noise")) {
        const json& noise = doc.at("noise");
        if (!noise.is_object()) reject("noise", "must be an object");
        for (const auto& [key, value] : noise.items()) {
            if (!kNoiseKeys.contains(key)) reject("noise." + key, "unknown field");
        }
        auto take = [&](const char* key, double& slot) {
            if (noise.contains(key)) slot = number(noise, key, std::string("noise.") + key);
        };
        take("sigma_ra_sq", cfg.noise.sigma_ra_sq);
        take("sigma_rb_sq", cfg.noise.sigma_rb_sq);
        take("sigma_da_sq", cfg.noise.sigma_da_sq);
        take("sigma_db_sq", cfg.noise.sigma_db_sq);
    }
    return validate_config(cfg);
}

SystemConfig load_config(const std::filesystem::path& path) { return config_from_json(read_text_file(path)); }

std::string config_to_json(const SystemConfig& cfg) {
    json doc = {
        {"n_subcarriers", cfg.n_subcarriers},
        {"p_max_mw", cfg.p_max},
        {"eta", cfg.eta},
        {"d0", cfg.d0},
        {"dr", cfg.dr},
        {"alpha", cfg.alpha},
        {"taps", cfg.taps},
        {"noise",
         {{"sigma_ra_sq", cfg.noise.sigma_ra_sq},
          {"sigma_rb_sq", cfg.noise.sigma_rb_sq},
          {"sigma_da_sq", cfg.noise.sigma_da_sq},
          {"sigma_db_sq", cfg.noise.sigma_db_sq}}},
    };
    return doc.dump(2) + "\n";
}

ChannelRealization channel_from_json(std::string_view text) {
    const json doc = parse_object(text, "channel");
    ChannelRealization channel{gains(doc, "h_sq"), gains(doc, "g_sq")};
    if (channel.h_sq.size() != channel.g_sq.size() || channel.h_sq.empty()) {
        reject("channel", "h_sq and g_sq must be nonempty and of equal length");
    }
    for (std::size_t i = 0; i < channel.size(); ++i) {
        for (double x : {channel.h_sq[i], channel.g_sq[i]}) {
            if (!std::isfinite(x) || x < 0.0) reject("channel", "gains must be finite and nonnegative");
        }
    }
    return channel;
}

ChannelRealization load_channel(const std::filesystem::path& path) {
    return channel_from_json(read_text_file(path));
}

std::string allocation_to_json(const AllocationResult& result) {
    json pairs = json::array();
    for (std::size_t i = 0; i < result.pairing.size(); ++i) {
        pairs.push_back({
            {"incoming", i},
            {"outgoing", result.pairing[i]},
            {"rho_info", result.rho_i[i]},
            {"rho_harvest", 1.0 - result.rho_i[i]},
            {"power_mw", result.powers[i]},
            {"relay_power_mw", result.relay_powers[i]},
            {"rate_bps_hz", result.pair_rates[i]},
        });
    }
    json doc = {
        {"pairing", result.pairing.perm()},
        {"rho", result.rho_i},
        {"powers_mw", result.powers},
        {"pair_rates_bps_hz", result.pair_rates},
        {"total_power_mw", result.total_power()},
        {"total_rate_bps_hz", result.total_rate},
        {"pairs", pairs},
    };
    return doc.dump(2) + "\n";
}

std::string report_to_json(const oracle::VerificationReport& report) {
    json doc = json::array();
    for (const auto& c : report.checks) {
        doc.push_back({{"check_name", c.name},
                       {"pass", c.pass},
                       {"residual", finite_or_null(c.residual)},
                       {"tolerance", c.tolerance}});
    }
    return doc.dump(2) + "\n";
}

void write_channel_csv_header(std::ostream& out) { out << "trial,subcarrier,h_sq,g_sq\n"; }

void write_channel_csv_rows(std::ostream& out, std::uint64_t trial, const ChannelRealization& channel) {
    for (std::size_t n = 0; n < channel.size(); ++n) {
        out << fmt::format("{},{},{},{}\n", trial, n, channel.h_sq[n], channel.g_sq[n]);
    }
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) {
        throw IoError("failed reading " + path.string());
    }
    return buffer.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) {
        throw IoError("failed writing " + path.string());
    }
}

}  // namespace swipt
