#include <iostream>
#include <string>
#include <vector>

#include "eonsim/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return eonsim::cli_main(args, std::cout, std::cerr);
}
