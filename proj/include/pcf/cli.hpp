#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pcf::cli {

enum ExitCode { kOk = 0, kInvalidInput = 1, kEmpty = 2, kInternal = 3 };

// Runs one command line (without the program name). Results go to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pcf::cli
