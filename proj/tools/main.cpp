#include <iostream>
#include <string>
#include <vector>

#include "condagg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return condagg::cli::run(args, std::cout, std::cerr);
}
