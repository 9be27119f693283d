#include <iostream>

#include "coxhyp/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return coxhyp::cli::run(args, std::cout, std::cerr);
}
