#include <iostream>
#include <string>
#include <vector>

#include "thetakit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return thetakit::run_cli(args, std::cout, std::cerr);
}
