#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace homfree {

/// Runs the command line `args` (args[0] is the program name). Returns the
/// process exit code: 0 on success, 1 when a law violation or counterexample
/// is reported, 2 on usage or parse errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace homfree
