#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace richelot::cli {

/// Exit codes: 0 success, 1 input error, 2 certificate failure, 3 budget exceeded.
/// JSON goes to `out`, diagnostics to `err`.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

/// Same, with the arguments after the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace richelot::cli
