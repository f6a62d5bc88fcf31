#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wdist::cli {

/// Runs the command line (args excludes the program name). `in` backs the
/// "-" file argument. Returns the process exit code:
/// 0 ok, 2 parse/validation, 3 resource limit, 4 consistency failure.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace wdist::cli
