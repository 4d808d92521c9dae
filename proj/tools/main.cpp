#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  const hgs::cli::Outcome outcome = hgs::cli::run(std::vector<std::string>(argv + 1, argv + argc));
  std::cout << outcome.out << std::flush;
  std::cerr << outcome.err << std::flush;
  return outcome.exit_code;
}
