#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coorbit {

/// Executes one CLI invocation. `args` are the argv entries after the program
/// name. Returns the process exit code: 0 on success, 1 when a golden battery
/// reports a mismatch, 2 on runtime errors, CLI parse codes otherwise.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coorbit
