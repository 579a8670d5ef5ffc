// Runs the ten acceptance criteria and prints one line per criterion.
#include <cstring>
#include <iostream>

#include "chargen/acceptance.hpp"

int main(int argc, char** argv) {
  chargen::Level level = chargen::Level::Full;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--quick") == 0) {
      level = chargen::Level::Quick;
    } else {
      std::cerr << "usage: acceptance [--quick]\n";
      return 1;
    }
  }
  bool all = true;
  for (int id = 1; id <= chargen::kCriterionCount; ++id) {
    const chargen::CriterionResult r = chargen::run_criterion(id, level);
    std::cout << chargen::format_result(r) << std::endl;
    all = all && r.passed;
  }
  return all ? 0 : 1;
}
