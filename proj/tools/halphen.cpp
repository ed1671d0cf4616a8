#include <iostream>

#include "halphen_cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return halphen::cli::run(args, std::cout, std::cerr);
}
