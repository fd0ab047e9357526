#include <iostream>

#include "ipm/cli.hpp"

int main(int argc, char** argv) {
  return ipm::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
