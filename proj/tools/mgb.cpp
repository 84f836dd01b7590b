#include <iostream>
#include <string>
#include <vector>

#include "mgb/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mgb::run_cli(args, std::cout, std::cerr);
}
