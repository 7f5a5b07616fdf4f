// Copyright 2026 The qmlearn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qmlearn/statevector.hpp"

namespace qmlearn {

enum class Mode { Classical, Quantum, Both, VerifyFs, VerifyKickback, VerifyCount, BoundTable, Sweep };
enum class OutputFormat { Json, Csv };

enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,
    kExitUsage = 2,
    kExitResource = 3,
};

struct RunConfig {
    /// Field specs (`p^r:modulus` or bare q). Exactly one except in sweep mode.
    std::vector<std::string> fields;
    std::vector<int> n_values;
    std::vector<int> d_values;
    Mode mode = Mode::Both;
    int trials = 1;
    std::uint64_t seed = 0;
    OutputFormat format = OutputFormat::Json;
    std::optional<std::string> poly_file;
    std::size_t mem_cap = kDefaultMemCap;
    /// Adds wall-clock time to verifier reports (breaks byte-identical output).
    bool timing = false;
};

/// Throws Error(ParseError) for an unknown name.
Mode parse_mode(std::string_view name);
std::string_view mode_name(Mode mode);

/// Comma-separated integers and inclusive ranges: "5", "1,3,4", "3..8,12".
std::vector<int> parse_int_list(std::string_view text);

/// Runs the configured experiment, writing line-oriented JSON or CSV to `out`
/// and diagnostics to `err`. Returns an ExitCode.
int run(const RunConfig &config, std::ostream &out, std::ostream &err);

}  // namespace qmlearn
