#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "chargen/laurent_poly.hpp"

namespace chargen {

/// The transcribed formulas (numerators, denominators, fundamental
/// characters) in canonical polynomial text, keyed by file stem.
///
/// The embedded set is compiled in from data/golden. A directory overlay
/// replaces any file it contains and keeps the rest, which is how tampered
/// copies are injected for negative controls.
class GoldenSet {
 public:
  static const GoldenSet& embedded();
  static GoldenSet from_directory(const std::filesystem::path& dir);

  GoldenSet with_override(const std::string& name, std::string text) const;

  bool contains(std::string_view name) const;
  const std::string& text(std::string_view name) const;
  LaurentPoly poly(std::string_view name, const VarSet& vars) const;
  std::vector<std::string> names() const;

  // Write every file to `dir` (used to build tampered copies).
  void write_directory(const std::filesystem::path& dir) const;

 private:
  std::map<std::string, std::string, std::less<>> files_;
};

// Common variable sets.
const VarSet& x_vars();    // x1 x2 x3
const VarSet& z_vars();    // z1 z2 z3
const VarSet& t_vars();    // t1 t2 t3
const VarSet& tz_vars();   // t1 t2 t3 z1 z2 z3

}  // namespace chargen
