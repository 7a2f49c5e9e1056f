#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace specgraph::cli {

/// args excludes the program name. Returns 0 on success, 1 when a verify
/// assertion fails or a computation errors out, 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace specgraph::cli
