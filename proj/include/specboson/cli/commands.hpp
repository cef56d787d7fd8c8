// Copyright 2026 The specboson Authors
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

#ifndef SPECBOSON_CLI_COMMANDS_HPP
#define SPECBOSON_CLI_COMMANDS_HPP

#include <cstddef>
#include <exception>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "specboson/cli/config.hpp"

namespace specboson::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitInput = 2,
    kExitCapacity = 3,
    kExitVerification = 4,
};

inline constexpr double kVerifyTolerance = 1e-9;

struct CommandResult {
    json document;
    int exit_code = kExitOk;
};

struct AlphaGrid {
    double start = 0.0;
    double stop = 1.0;
    std::size_t count = 11;

    /// Evenly spaced points; the last one is exactly `stop`.
    std::vector<double> points() const;
    std::string to_string() const;
};

/// Parses "start:stop:count". Throws InputError on malformed text or
/// values outside [0, 1].
AlphaGrid parse_alpha_grid(const std::string& text);

CommandResult cmd_distribution(const ExperimentConfig& config);
CommandResult cmd_verify(const ExperimentConfig& config);
CommandResult cmd_hom_scan(const AlphaGrid& grid);
/// Accepts either a bare nested array or {"matrix": [...]}.
CommandResult cmd_permanent(const json& matrix_doc);

/// 2 for input problems, 3 for capacity guards.
int exit_code_for(const std::exception& e);

/// Round to 15 significant digits.
double round_significant(double value);

/// Pretty-printed JSON followed by a newline.
std::string render(const json& doc);

struct Invocation {
    std::string command;
    std::string config_path;
    std::string output_path = "stdout";
    std::optional<double> eps;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> alpha_grid;
};

/// Runs one subcommand end to end: loads inputs, writes the results
/// document to the output path (or `out` for stdout), reports errors on
/// `err`, and returns the process exit code.
int run(const Invocation& invocation, std::ostream& out, std::ostream& err);

}  // namespace specboson::cli

#endif
