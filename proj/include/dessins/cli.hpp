#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dessins {

/// Runs the `dessin` command line (args[0] is the program name).
/// Returns 0 on success, 1 on a domain or file error, 2 on a usage error.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace dessins
