#include <iostream>
#include <string>
#include <vector>

#include "demyanov/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return demyanov::cli::dispatch(args, std::cout, std::cerr);
}
