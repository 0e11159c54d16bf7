#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace thetaspline {

/// Runs one CLI invocation. `args` excludes the program name. Exit codes:
/// 0 success, 2 validation/usage, 3 precision or convergence failure, 4 IO.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Names of the subcommands, in help order.
const std::vector<std::string>& subcommand_names();

}  // namespace thetaspline
