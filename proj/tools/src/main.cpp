#include <unistd.h>

#include <cstdlib>
#include <iostream>

#include "smoothfano_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  sfano::cli::RunOptions options;
  options.color = isatty(STDOUT_FILENO) && std::getenv("NO_COLOR") == nullptr;
  return sfano::cli::run(args, std::cout, std::cerr, options);
}
