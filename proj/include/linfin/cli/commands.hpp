#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace linfin::cli {

inline constexpr int kSchemaVersion = 1;

// Runs the command line `args` (without the program name). JSON goes to
// `out`, diagnostics to `err`. Returns 0 for a decided answer, 1 when
// undecided, 2 for invalid input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace linfin::cli
