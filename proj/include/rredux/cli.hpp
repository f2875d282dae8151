#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rredux {

/// Runs the command line tool on `args` (without the program name). Returns
/// the process exit status: 0 on success, 1 on input or data errors, 2 on bad
/// flags or arguments. Diagnostics go to `err` only.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace rredux
