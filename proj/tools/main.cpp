#include <iostream>

#include "trimaps/cli.hpp"

int main(int argc, char** argv) {
  return trimaps::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
