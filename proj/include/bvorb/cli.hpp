#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bv::cli {

/// Runs the command line `args` (without the program name). Returns 0 on
/// success, 1 when `verify` finds a failing check, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bv::cli
