#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace minforest {

/// Entry point behind the `minforest` binary. `args` excludes the program
/// name. Returns the process exit code: 0 on success (for `verify`, only
/// when no check failed), 1 on runtime errors or failed verification, CLI11
/// codes for usage errors. All output goes through the given streams.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace minforest
