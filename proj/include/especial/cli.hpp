#pragma once

// Command-line front end. Exit status: 0 success, 1 semantic failure (invalid
// families, failed checks, points outside the disc), 2 malformed input or usage.

#include <iosfwd>
#include <string>
#include <vector>

namespace especial {

/// `args` excludes the program name. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace especial
