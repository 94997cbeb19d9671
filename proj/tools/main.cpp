#include <iostream>

#include "toulmin/cli.hpp"

int main(int argc, char** argv) {
  return toulmin::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
