#pragma once

// Command-line front end. Exit codes: 0 compatible/alcoved, 1 incompatible or
// not alcoved, 2 usage, parse or bound error, 3 criterion and oracle disagree.

#include <iosfwd>
#include <string>
#include <vector>

namespace alcoved::cli {

enum ExitCode : int { kOk = 0, kNegative = 1, kUsage = 2, kDisagreement = 3 };

/// Runs one command. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace alcoved::cli
