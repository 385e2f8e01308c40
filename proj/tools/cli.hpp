#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pottssos::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,  // verification failed or violations found
  kUsage = 2,    // bad flags or out-of-domain values
};

// Runs the command line (args excludes the program name). Everything the
// command prints goes to out/err; nothing touches the process streams.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pottssos::cli
