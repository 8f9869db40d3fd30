#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orderlab::cli {

/// Runs the command line (without the program name). Exit codes: 0 holds
/// or structure found, 1 fails or absent, 2 input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// ORDERLAB_MAX_ELEMENTS, default 10.
int max_elements();

}  // namespace orderlab::cli
