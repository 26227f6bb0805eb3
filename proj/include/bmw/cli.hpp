#pragma once

#include <iosfwd>

namespace bmw {

enum ExitCode { kOk = 0, kUsage = 1, kComputation = 2, kMismatch = 3 };

// the whole `bmw` command line; argv[0] is the program name
int runCommand(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bmw
