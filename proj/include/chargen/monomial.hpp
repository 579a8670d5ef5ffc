#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "chargen/varset.hpp"

namespace chargen {

// Laurent monomial: a signed exponent per variable. Slots past the owning
// VarSet's size are always zero, so comparisons over the full array agree
// with comparisons over the live prefix.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::span<const int> exponents);
  Monomial(std::initializer_list<int> exponents)
      : Monomial(std::span<const int>(exponents.begin(), exponents.size())) {}

  int operator[](std::size_t i) const { return exp_[i]; }
  void set(std::size_t i, int e) {
    degree_ += e - exp_[i];
    exp_[i] = e;
  }
  int degree() const { return degree_; }
  bool is_one() const { return *this == Monomial{}; }

  std::vector<int> exponents(std::size_t n) const {
    return {exp_.begin(), exp_.begin() + static_cast<std::ptrdiff_t>(n)};
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.exp_[i] = exp_[i] + o.exp_[i];
    r.degree_ = degree_ + o.degree_;
    return r;
  }
  Monomial operator/(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.exp_[i] = exp_[i] - o.exp_[i];
    r.degree_ = degree_ - o.degree_;
    return r;
  }
  Monomial pow(int k) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.exp_[i] = exp_[i] * k;
    r.degree_ = degree_ * k;
    return r;
  }

  // Componentwise <= : this divides o in the polynomial sense.
  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (exp_[i] > o.exp_[i]) return false;
    return true;
  }
  bool non_negative() const {
    return std::all_of(exp_.begin(), exp_.end(), [](int e) { return e >= 0; });
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp_ == b.exp_; }

  // Graded lexicographic: total degree first, then the first variable.
  friend bool grlex_less(const Monomial& a, const Monomial& b) {
    if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
    return a.exp_ < b.exp_;
  }

  struct Hash {
    std::size_t operator()(const Monomial& m) const noexcept {
      std::uint64_t h = 1469598103934665603ull;
      for (int e : m.exp_) {
        h ^= static_cast<std::uint32_t>(e);
        h *= 1099511628211ull;
      }
      return static_cast<std::size_t>(h);
    }
  };

 private:
  std::array<std::int32_t, kMaxVars> exp_{};
  std::int32_t degree_ = 0;
};

struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(a, b); }
};

}  // namespace chargen
