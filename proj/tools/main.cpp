#include <iostream>

#include "albertkit/cli.hpp"

int main(int argc, char** argv) {
  return albertkit::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
