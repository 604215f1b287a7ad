#include <iostream>
#include <string>
#include <vector>

#include "pairwalk/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return pairwalk::cli::run(args, std::cin, std::cout, std::cerr);
}
