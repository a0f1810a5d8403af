#include <iostream>

#include "tourney/cli.hpp"

int main(int argc, char** argv) {
  return tourney::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
