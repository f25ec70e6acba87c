#include <iostream>

#include "gtm/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gtm::run_cli(args, std::cout, std::cerr);
}
