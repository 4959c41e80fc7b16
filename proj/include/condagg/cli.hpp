#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace condagg::cli {

// Runs the command line tool on the given arguments (program name excluded).
// Exit codes: 0 success, 2 parse error, 3 validation error, 4 precondition
// error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace condagg::cli
