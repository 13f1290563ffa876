#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zrq::cli {

/// Runs one command line (without the program name) and returns the exit
/// code: 0 success, 1 usage or parse error, 2 domain error, 3 not found
/// (isolated point, no witness, type mismatch).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace zrq::cli
