#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sabotage {

// Exit statuses of the command-line front end.
enum ExitStatus : int { kYes = 0, kNo = 1, kUsage = 2, kGuard = 3 };

// Runs one command line (args excludes the program name). Structured output
// goes to out as line-oriented JSON; diagnostics go to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sabotage
