#include <iostream>

#include "alcove_cli/cli.hpp"

int main(int argc, char** argv) {
  return alcove::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
