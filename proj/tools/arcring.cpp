#include <iostream>
#include <string>
#include <vector>

#include "arcring/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return arcring::run_cli(args, std::cout, std::cerr);
}
