#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace chargen::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerifyFail = 2;

struct Outcome {
  int exit_code = kExitOk;
  std::string out;  // the envelope (or help text)
  std::string err;  // diagnostics
};

// `args` excludes the program name.
Outcome run(const std::vector<std::string>& args);

// The text format: one "path = value" line per leaf, e.g.
//   result.table[2].value = 3
// Leaves are strings or booleans; from_text(to_text(j)) == j.
std::string to_text(const nlohmann::ordered_json& j);
nlohmann::ordered_json from_text(std::string_view text);

}  // namespace chargen::cli
