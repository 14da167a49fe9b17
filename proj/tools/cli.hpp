#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gammaop::cli {

/// Runs one command line (without the program name). Returns the exit code:
/// 0 on success, 1 on a domain or input error (error JSON on `err`), 2 on a
/// usage error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gammaop::cli
