#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gspec::cli {

enum ExitCode { kOk = 0, kInputError = 2, kInvariantError = 3 };

// Runs one command line (args excludes the program name). Text or JSON goes
// to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace gspec::cli
