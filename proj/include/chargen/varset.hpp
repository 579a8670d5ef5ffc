#pragma once

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace chargen {

// Upper bound on the number of variables of any polynomial ring we build.
inline constexpr std::size_t kMaxVars = 8;

/// Ordered, immutable list of variable names. Copies share storage; two
/// VarSets compare equal when their name lists are equal.
class VarSet {
 public:
  VarSet();
  VarSet(std::initializer_list<std::string_view> names);
  explicit VarSet(std::vector<std::string> names);

  std::size_t size() const { return names_->size(); }
  bool empty() const { return names_->empty(); }
  const std::string& name(std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const { return *names_; }

  std::optional<std::size_t> index_of(std::string_view name) const;
  bool contains(std::string_view name) const { return index_of(name).has_value(); }
  // Like index_of, but throws UnknownVariable.
  std::size_t require(std::string_view name) const;

  // Variables of this set that are not in `other`, in this set's order.
  VarSet without(const VarSet& other) const;

  std::string to_string() const;

  friend bool operator==(const VarSet& a, const VarSet& b);

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

}  // namespace chargen
