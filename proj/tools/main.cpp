#include <iostream>

#include "lclab/report.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lclab::run_cli(args, std::cout, std::cerr);
}
