#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polycollatz::cli {

/// Runs one command line (without the program name). Output is buffered and
/// written only when the command finishes, so failures never leave partial
/// output behind. Returns 0 on success, 1 on computation errors and 2 on
/// usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polycollatz::cli
