#pragma once

// Command-line front end of the `torfan` tool.

#include "json.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace torfan::cli {

enum ExitCode : int {
    success = 0,
    domain_error = 1,
    usage_error = 2,
};

/// Runs one subcommand; `args` excludes the program name. Reports go to `out` (or --output),
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Human-readable rendering of a subcommand's JSON report.
std::string emit_report(const nlohmann::json& report);

}  // namespace torfan::cli
