#include <iostream>

#include "cmlab/cli/app.hpp"

int main(int argc, char** argv) {
  return cmlab::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
