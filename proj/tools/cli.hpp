#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ellsub::cli {

/// Exit statuses of the command-line tool.
enum Exit : int { ok = 0, domain_error = 1, identity_violation = 2, usage = 64 };

/// Runs one command line (without the program name). JSON goes to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace ellsub::cli
