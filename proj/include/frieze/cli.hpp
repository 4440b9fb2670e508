#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace frieze {

// Runs one CLI invocation; argv excludes the program name.
// Exit codes: 0 success, 1 domain error, 2 usage error.
int run_cli(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace frieze
