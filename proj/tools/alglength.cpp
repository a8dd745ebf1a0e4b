#include <iostream>
#include <string>
#include <vector>

#include "alglength/cli.hpp"

int main(int argc, char **argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return alglength::cli::run_command(args, std::cout, std::cerr);
}
