#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arsec::cli {

/// Runs the command line; returns the process exit status (0 ok, 2 bad input, 3 numeric failure).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arsec::cli
