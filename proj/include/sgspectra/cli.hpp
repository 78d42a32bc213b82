#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sgs::cli {

/// Runs one CLI invocation. args excludes the program name. Returns the
/// process exit code: 0 ok, 1 refuted (a check came back false/none), 2 error.
/// With --json every command prints a single {"command","status","data"} object.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sgs::cli
