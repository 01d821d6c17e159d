#include <unistd.h>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const bool color = std::getenv("SCAFF_NO_COLOR") == nullptr && isatty(STDERR_FILENO) != 0;
  return scaff::cli::run(args, {std::cout, std::cerr, color});
}
