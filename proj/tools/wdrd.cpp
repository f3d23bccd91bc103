#include <iostream>
#include <string>
#include <vector>

#include "wdrd/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return wdrd::run(args, std::cout, std::cerr);
}
