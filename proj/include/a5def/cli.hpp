#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace a5def {

// Executes one CLI invocation. Exit codes: 0 success, 1 verification
// mismatch, 2 usage error or malformed input.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace a5def
