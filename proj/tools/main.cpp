#include <iostream>
#include <string>
#include <vector>

#include "homfree/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return homfree::run_cli(args, std::cout, std::cerr);
}
