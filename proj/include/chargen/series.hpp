#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chargen/laurent_poly.hpp"

namespace chargen {

using Exponent = std::vector<int>;

/// Quotient of two Laurent polynomials over the same variables.
struct RationalFn {
  LaurentPoly num;
  LaurentPoly den;

  // Throws if den is zero or the variable sets differ.
  RationalFn(LaurentPoly numerator, LaurentPoly denominator);
};

/// Multivariate power series in the expansion variables, truncated to a box
/// 0 <= e_i <= caps_i. Coefficients are Laurent polynomials over the
/// remaining (coefficient) variables. Storage is dense over the box.
class TruncatedSeries {
 public:
  TruncatedSeries(VarSet vars, std::vector<int> caps, VarSet coeff_vars);

  // Split `p` (over expansion + coefficient variables) by expansion
  // exponent, discarding everything outside the box. Throws if an expansion
  // variable occurs with a negative exponent.
  static TruncatedSeries truncate(const LaurentPoly& p, const VarSet& vars,
                                  std::vector<int> caps);

  const VarSet& vars() const { return vars_; }
  const VarSet& coeff_vars() const { return coeff_vars_; }
  const std::vector<int>& caps() const { return caps_; }
  std::size_t box_size() const { return coeffs_.size(); }

  bool within_caps(std::span<const int> e) const;
  // Throws ExponentOutOfCaps.
  const LaurentPoly& coeff(std::span<const int> e) const;
  void set_coeff(std::span<const int> e, LaurentPoly c);

  // Box position <-> exponent, row-major with the last variable fastest.
  std::size_t index(std::span<const int> e) const;
  Exponent exponent(std::size_t index) const;

  bool is_zero() const;
  // Nonzero coefficients ordered by total degree, then lexicographically.
  std::vector<std::pair<Exponent, LaurentPoly>> nonzero_terms() const;
  // First nonzero exponent in the same order.
  std::optional<Exponent> first_nonzero() const;

  TruncatedSeries map_coefficients(const std::function<LaurentPoly(const LaurentPoly&)>& f) const;

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  // Product truncated to the common caps.
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

 private:
  void require_compatible(const TruncatedSeries& o, const char* op) const;

  VarSet vars_;
  std::vector<int> caps_;
  VarSet coeff_vars_;
  std::vector<std::size_t> strides_;
  std::vector<LaurentPoly> coeffs_;
};

// Expand r as a power series in `expansion_vars` up to `caps`; the other
// variables ride along in the coefficients. The constant term (in the
// expansion variables) of den must be a nonzero rational number, otherwise
// DenominatorNotUnit is thrown.
TruncatedSeries series_expand(const RationalFn& r, const std::vector<std::string>& expansion_vars,
                              std::vector<int> caps);

// Stored coefficient or zero; throws ExponentOutOfCaps.
inline const LaurentPoly& coeff(const TruncatedSeries& s, std::span<const int> e) {
  return s.coeff(e);
}

std::string format_exponent(std::span<const int> e);

}  // namespace chargen
