#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "chargen/golden.hpp"

namespace chargen {

enum class Level { Quick, Full };
Level parse_level(std::string_view s);  // "quick" | "full"; throws UnknownKind

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  // Summary on success; the first counterexample on failure.
  std::string detail;
  double seconds = 0;
};

inline constexpr int kCriterionCount = 10;

// Quick halves every numeric bound (degree limits, caps, ranges).
CriterionResult run_criterion(int id, Level level,
                              const GoldenSet& golden = GoldenSet::embedded());
std::vector<CriterionResult> run_acceptance(Level level,
                                            const GoldenSet& golden = GoldenSet::embedded());

// "criterion 3 PASS dimension generating functions: ..." (no timing).
std::string format_result(const CriterionResult& r);

}  // namespace chargen
