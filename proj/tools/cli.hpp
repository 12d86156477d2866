#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qhopf::cli {

/// Runs the command line (args excludes the program name). Returns 0 on
/// success, 1 when a check fails and 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qhopf::cli
