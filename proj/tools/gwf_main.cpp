#include <iostream>
#include <string>
#include <vector>

#include "gwf/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gwf::run_cli(args, std::cout, std::cerr);
}
