#include <iostream>
#include <string>
#include <vector>

#include "assocnb/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return assocnb::run_cli(args, std::cout, std::cerr);
}
