#include <iostream>
#include <string>
#include <vector>

#include "thetaspline/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return thetaspline::dispatch(args, std::cout, std::cerr);
}
