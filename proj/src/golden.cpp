#include "chargen/golden.hpp"

#include <fstream>
#include <sstream>

#include "chargen/errors.hpp"
#include "chargen/poly_text.hpp"

namespace chargen {

namespace detail {
const std::map<std::string, std::string>& embedded_golden();
}

const GoldenSet& GoldenSet::embedded() {
  static const GoldenSet set = [] {
    GoldenSet g;
    for (const auto& [k, v] : detail::embedded_golden()) g.files_.emplace(k, v);
    return g;
  }();
  return set;
}

GoldenSet GoldenSet::from_directory(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir))
    throw Error("golden directory does not exist: " + dir.string());
  GoldenSet g = embedded();
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() != ".poly") continue;
    std::ifstream in(entry.path());
    if (!in) throw Error("cannot read " + entry.path().string());
    std::ostringstream buf;
    buf << in.rdbuf();
    g.files_[entry.path().stem().string()] = buf.str();
  }
  return g;
}

GoldenSet GoldenSet::with_override(const std::string& name, std::string text) const {
  GoldenSet g = *this;
  g.files_[name] = std::move(text);
  return g;
}

bool GoldenSet::contains(std::string_view name) const { return files_.find(name) != files_.end(); }

const std::string& GoldenSet::text(std::string_view name) const {
  auto it = files_.find(name);
  if (it == files_.end()) throw Error("no golden file named '" + std::string(name) + "'");
  return it->second;
}

LaurentPoly GoldenSet::poly(std::string_view name, const VarSet& vars) const {
  try {
    return parse_poly(text(name), vars);
  } catch (const ParseError& e) {
    throw ParseError("golden file '" + std::string(name) + "': " + e.what());
  }
}

std::vector<std::string> GoldenSet::names() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : files_) out.push_back(k);
  return out;
}

void GoldenSet::write_directory(const std::filesystem::path& dir) const {
  std::filesystem::create_directories(dir);
  for (const auto& [k, v] : files_) {
    std::ofstream out(dir / (k + ".poly"));
    if (!out) throw Error("cannot write golden file into " + dir.string());
    out << v;
  }
}

const VarSet& x_vars() {
  static const VarSet v{"x1", "x2", "x3"};
  return v;
}
const VarSet& z_vars() {
  static const VarSet v{"z1", "z2", "z3"};
  return v;
}
const VarSet& t_vars() {
  static const VarSet v{"t1", "t2", "t3"};
  return v;
}
const VarSet& tz_vars() {
  static const VarSet v{"t1", "t2", "t3", "z1", "z2", "z3"};
  return v;
}

}  // namespace chargen
