#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace scaff::cli {

/// Exit statuses shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitIo = 1,
  kExitValidation = 2,
};

struct Streams {
  std::ostream& out;
  std::ostream& err;
  bool color = false;  ///< ANSI colouring of diagnostics
};

/// Runs the `scaff` command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, const Streams& streams);

}  // namespace scaff::cli
