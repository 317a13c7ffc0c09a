#include <iostream>
#include <string>
#include <vector>

#include "secant/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return secant::cli::main(args, std::cout, std::cerr);
}
