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

#ifndef SWIPT_TOOLS_CLI_HPP
#define SWIPT_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace swipt::cli {

// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kInvalidInput = 1;
inline constexpr int kIoFailure = 2;
inline constexpr int kVerificationFailed = 3;

/// Runs the tool on `args` (without the program name). Normal output goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "10,20,30" and ranges "0.1..0.9:0.1" (start..stop:step, step
/// defaults to 1), mixed freely. Throws std::invalid_argument.
std::vector<double> parse_values(const std::string& text);

}  // namespace swipt::cli

#endif  // SWIPT_TOOLS_CLI_HPP
