#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace copwin {

// Full command-line surface. `args` excludes the program name. Returns 0 on
// success, 1 on domain errors (bad graph, unknown vertex, malformed input
// files), 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace copwin
