/*
   Copyright 2026 The qch Authors

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

#ifndef QCH_CLI_HPP
#define QCH_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qch/scalars.hpp"

namespace qch::cli {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kReportSchema = "qch.report/1";

enum class PairKind { rtt, rea, custom };

struct CaseConfig {
    int m = 1;
    int n = 1;
    PairKind pair = PairKind::rtt;
    std::string rfile;
    std::string ffile;       // custom pair only; defaults to the permutation
    std::optional<Rational> q0;  // empty means symbolic q
    std::vector<std::string> tasks{"ch"};
    int arity_bound = 0;     // 0 means (m+1)(n+1)
    std::string report_path;
    bool allow_long = false;
    std::uint64_t seed = 1;

    int effective_arity_bound() const { return arity_bound > 0 ? arity_bound : (m + 1) * (n + 1); }
};

/// Known task names in execution order.
const std::vector<std::string>& task_names();

/// Throws ConfigError when the configuration cannot be run.
void validate(const CaseConfig& config);

/// Parses "symbolic" (empty result) or a rational P/Q.
std::optional<Rational> parse_q(const std::string& text);

struct RunResult {
    nlohmann::ordered_json report;
    std::string summary;
    int exit_code = 0;
};

/// Executes the configured tasks. Configuration problems give exit code 2
/// with an "error" field; failed identities give exit code 1.
RunResult run(const CaseConfig& config);

/// Copy of a report with every "seconds" field removed.
nlohmann::ordered_json strip_timings(const nlohmann::ordered_json& report);

/// Command-line entry point; writes the summary to out and diagnostics to err.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qch::cli

#endif
