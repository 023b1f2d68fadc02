#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace thresholds::cli {

enum ExitCode : int { Ok = 0, Failure = 1, InputError = 2, StrictFailure = 3 };

// Runs one command line (without the program name). budget_spec is the value
// of THRESHOLDS_BUDGET, if set.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& budget_spec = std::nullopt);

}  // namespace thresholds::cli
