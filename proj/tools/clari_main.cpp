#include <iostream>
#include <string>
#include <vector>

#include "clari/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return clari::runCommand(args, std::cout, std::cerr);
}
