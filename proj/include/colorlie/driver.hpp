#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "colorlie/io.hpp"

namespace colorlie {

struct RunResult {
    nlohmann::json report;
    int exit_code = 0;  // 0 ok, 1 mathematical check failed, 2 input error
};

/// Dispatches one subcommand against a parsed file. Options are the string
/// values of the command's flags. The report is deterministic: repeated runs
/// on identical inputs are byte-identical.
RunResult run_command(const std::string& command, const AlgebraFile& file,
                      const std::map<std::string, std::string>& options,
                      const std::string& digest);

/// Convenience wrapper: parse, dispatch, render; input errors come back as
/// exit code 2 with an "error" report instead of an exception.
RunResult run_on_text(const std::string& command, const std::string& json_text,
                      const std::map<std::string, std::string>& options);

}  // namespace colorlie
