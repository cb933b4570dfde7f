#include <iostream>

#include "angcalc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return angcalc::cli::run(args, std::cout, std::cerr);
}
