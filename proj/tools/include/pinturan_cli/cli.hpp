#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pinturan::cli {

enum ExitCode : int {
    kOk = 0,
    kParseError = 1,
    kSemanticError = 2,
    kBudgetExhausted = 3,
    kInternalError = 4,
};

/// Entry point shared by the executable and the acceptance suite. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace pinturan::cli
