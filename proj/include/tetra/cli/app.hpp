#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tetra::cli {

/// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitBoundary = 1,
  kExitExterior = 2,
  kExitUsage = 64,
  kExitInvariant = 65,
  kExitVerification = 70,
  kExitIo = 74,
};

/// Runs the `tetra` command line. Reports go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Same, with the arguments after the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tetra::cli
