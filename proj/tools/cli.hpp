#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace typicality::cli {

// Parses and executes one command line (without argv[0]). Exit codes:
// 0 success, 2 argument error, 3 regime error, 4 failed strict or
// acceptance check.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace typicality::cli
