#pragma once

// Command-line front end. Kept out of main() so tests can drive it in-process.

#include <ostream>

namespace spiralbox::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,         // bad flags or flag values
  kWriteFailure = 3,  // output could not be written
  kFitFailure = 4,    // a fit did not bracket or did not converge
};

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace spiralbox::cli
