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

#ifndef SWIPT_IO_HPP
#define SWIPT_IO_HPP

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "swipt/model.hpp"
#include "swipt/oracle.hpp"

namespace swipt {

/// File could not be read or written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Config JSON. Every key is optional and defaults to default_config():
//   {
//     "n_subcarriers": 4, "p_max_mw": 1000, "p_max_dbm": 30, "eta": 1,
//     "d0": 1, "dr": 0.5, "alpha": 3, "taps": 4,
//     "noise": {"sigma_ra_sq": .., "sigma_rb_sq": .., "sigma_da_sq": .., "sigma_db_sq": ..}
//   }
// Noise values are mW. "p_max_mw" wins over "p_max_dbm". Unknown keys are
// rejected. Malformed JSON and invariant violations throw ConfigError.
SystemConfig config_from_json(std::string_view text);
SystemConfig load_config(const std::filesystem::path& path);
std::string config_to_json(const SystemConfig& cfg);

/// {"h_sq": [...], "g_sq": [...]}; throws ConfigError on bad content.
ChannelRealization channel_from_json(std::string_view text);
ChannelRealization load_channel(const std::filesystem::path& path);

std::string allocation_to_json(const AllocationResult& result);

/// [{"check_name": .., "pass": .., "residual": .., "tolerance": ..}, ...]
std::string report_to_json(const oracle::VerificationReport& report);

/// Rows "trial,subcarrier,h_sq,g_sq" for one channel; call
/// write_channel_csv_header once first.
void write_channel_csv_header(std::ostream& out);
void write_channel_csv_rows(std::ostream& out, std::uint64_t trial, const ChannelRealization& channel);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace swipt

#endif  // SWIPT_IO_HPP
