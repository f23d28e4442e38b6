/*
   Copyright 2026 The qsync Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef QSYNC_CLI_HPP
#define QSYNC_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>

#include <json.hpp>

#include "qsync/cyclotomy.hpp"
#include "qsync/distance.hpp"

namespace qsync::cli {

enum class Command { Classes, Cosets, Factor, Code, Chain, Enumerate, Regress };

Command parse_command(std::string_view name);

struct RunConfig {
    Command command = Command::Regress;
    std::uint64_t q = 0;
    std::uint64_t r = 0;
    std::string classes;
    std::set<Residue> inner_remove;
    std::set<Residue> outer_remove;
    /// `code` only: factors removed from the class generator.
    std::set<Residue> remove;
    /// `code` only: report the dual instead.
    bool dual = false;
    std::optional<std::uint64_t> z;
    int theorem = 1;
    std::uint64_t budget = kDefaultDistanceBudget;
    bool distances = true;
    bool json = false;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitRegressionFailed = 1;
inline constexpr int kExitInvalidArgument = 2;
inline constexpr int kExitInvariantViolation = 3;

/// "1,2,5" -> {1,2,5}; the empty string is the empty set.
std::set<Residue> parse_residue_list(std::string_view text);

/// Report object for one command. Throws InvalidArgument / InvariantViolation.
nlohmann::json report(const RunConfig& config);

/// Built-in regression scenarios with expected and observed values.
nlohmann::json regression_report();

/// Human-readable rendering of a report; carries the same numbers as the JSON.
void render_table(const nlohmann::json& report, std::ostream& out);

/// Dispatches, prints the report, and maps errors to exit codes with a one-line reason on `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace qsync::cli

#endif
