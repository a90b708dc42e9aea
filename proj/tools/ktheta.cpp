#include <iostream>
#include <string>
#include <vector>

#include "ktheta/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ktheta::cli::run(args, std::cout, std::cerr);
}
