#include <iostream>
#include <string>
#include <vector>

#include "a5def/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return a5def::run_command(args, std::cout, std::cerr);
}
