// Copyright 2026 The qadapt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "qadapt/coupling.hpp"

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace qadapt::cli {

// transpile
inline constexpr int kExitParseError = 1;
inline constexpr int kExitDisconnected = 2;
inline constexpr int kExitIllegal = 3;
// verify
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitIoError = 2;
// bench and argument errors
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 64;

/// "layout:NAME:N" or a path to a coupling JSON file.
CouplingGraph load_coupling(const std::string& spec);

/// "a..b" (or a single number) into an inclusive range.
std::pair<std::size_t, std::size_t> parse_range(const std::string& text);

/// Entry point shared by the binary and the tests. `args` excludes the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace qadapt::cli
