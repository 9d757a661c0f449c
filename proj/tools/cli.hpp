#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kleshchev::cli {

enum ExitCode : int { Success = 0, False = 1, Usage = 2, VerificationFailure = 3 };

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace kleshchev::cli
