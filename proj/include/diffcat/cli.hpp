#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace diffcat {

/// Runs the diffkit command line. `args` excludes the program name.
/// Returns 0 when every law passed, 1 on violations, 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace diffcat
