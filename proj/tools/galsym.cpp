#include <iostream>
#include <string>
#include <vector>

#include "galsym/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return galsym::cli::run(args, std::cin, std::cout);
}
