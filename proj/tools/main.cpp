#include <iostream>

#include "togliatti/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return togliatti::run_cli(args, std::cout, std::cerr);
}
