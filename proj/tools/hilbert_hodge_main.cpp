#include <iostream>
#include <string>
#include <vector>

#include "hilbert_hodge/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return hilbert_hodge::cli::main_entry(args, std::cout, std::cerr);
}
