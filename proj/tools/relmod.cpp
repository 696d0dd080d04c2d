#include <iostream>

#include "relmod/cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return relmod::cli::run(args, std::cout, std::cerr);
}
