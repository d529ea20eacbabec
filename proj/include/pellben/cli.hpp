#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pellben {

// Runs one CLI invocation. args excludes the program name. Returns the
// process exit status: 0 success, 1 domain error (square D, empty norm
// class, ...), 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pellben
