#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace weylcomb {

/// Runs the command line `args` (without the program name), writing results to `out`
/// and diagnostics to `err`. Returns 0 on success, 1 on domain errors, 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace weylcomb
