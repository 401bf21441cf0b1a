#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  const auto outcome = xmod::cli::run_cli(std::vector<std::string>(argv + 1, argv + argc));
  std::cout << outcome.out;
  std::cerr << outcome.err;
  return outcome.exit_code;
}
