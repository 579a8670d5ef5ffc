#include <iostream>

#include "chargen/cli.hpp"

int main(int argc, char** argv) {
  const chargen::cli::Outcome r = chargen::cli::run({argv + 1, argv + argc});
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
