#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qcp::cli {

// Runs one invocation; args excludes the program name. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcp::cli
