#include <iostream>

#include "gaudin/cli.hpp"

int main(int argc, char** argv) {
  return gaudin::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
