#include "chargen/varset.hpp"

#include <algorithm>
#include <set>

#include "chargen/errors.hpp"

namespace chargen {

namespace {

std::shared_ptr<const std::vector<std::string>> checked(std::vector<std::string> names) {
  if (names.size() > kMaxVars)
    throw Error("too many variables: " + std::to_string(names.size()) + " > " +
                std::to_string(kMaxVars));
  std::set<std::string_view> seen;
  for (const auto& n : names) {
    if (n.empty()) throw Error("empty variable name");
    if (!seen.insert(n).second) throw Error("duplicate variable name: " + n);
  }
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

}  // namespace

VarSet::VarSet() : names_(std::make_shared<const std::vector<std::string>>()) {}

VarSet::VarSet(std::initializer_list<std::string_view> names)
    : names_(checked(std::vector<std::string>(names.begin(), names.end()))) {}

VarSet::VarSet(std::vector<std::string> names) : names_(checked(std::move(names))) {}

std::optional<std::size_t> VarSet::index_of(std::string_view name) const {
  auto it = std::find(names_->begin(), names_->end(), name);
  if (it == names_->end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_->begin());
}

std::size_t VarSet::require(std::string_view name) const {
  if (auto i = index_of(name)) return *i;
  throw UnknownVariable("unknown variable '" + std::string(name) + "' in " + to_string());
}

VarSet VarSet::without(const VarSet& other) const {
  std::vector<std::string> rest;
  for (const auto& n : *names_)
    if (!other.contains(n)) rest.push_back(n);
  return VarSet(std::move(rest));
}

std::string VarSet::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < names_->size(); ++i) {
    if (i) s += ",";
    s += (*names_)[i];
  }
  return s + "}";
}

bool operator==(const VarSet& a, const VarSet& b) {
  return a.names_ == b.names_ || *a.names_ == *b.names_;
}

}  // namespace chargen
