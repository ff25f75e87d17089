#include <iostream>
#include <vector>

#include "tropcount/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return tropcount::run_cli(args, std::cout, std::cerr);
}
