#pragma once

#include <map>
#include <string>
#include <vector>

#include "chargen/laurent_poly.hpp"
#include "chargen/series.hpp"

namespace chargen {

/// Linear differential operator sum_k c_k(x) d^{a_k}, where each c_k is a
/// Laurent polynomial over `vars` and a_k is a multi-index of derivative
/// orders, one per variable of `vars`.
class DiffOperator {
 public:
  using Orders = std::vector<int>;

  explicit DiffOperator(VarSet vars);

  // Adds c * d^orders, merging with an existing term of the same orders.
  void add_term(const LaurentPoly& coefficient, Orders orders);
  // Convenience: orders given as a list of variable names, repeated for
  // higher derivatives, e.g. {"z1", "z1"}.
  void add_term(const LaurentPoly& coefficient, const std::vector<std::string>& wrt);

  const VarSet& vars() const { return vars_; }
  const std::map<Orders, LaurentPoly>& terms() const { return terms_; }
  int order() const;

  LaurentPoly apply(const LaurentPoly& p) const;
  // Acts on the expansion variables of `s` (which must equal vars());
  // terms leaving the caps are dropped.
  TruncatedSeries apply(const TruncatedSeries& s) const;

  // The same operator over a larger variable set (matched by name).
  DiffOperator embed(const VarSet& target) const;

  DiffOperator operator-(const DiffOperator& o) const;
  friend bool operator==(const DiffOperator& a, const DiffOperator& b);

  // e.g. "(4*t1^2)*D[t1^2] + (16*t1)*D[t1]"
  std::string to_string() const;

 private:
  VarSet vars_;
  std::map<Orders, LaurentPoly> terms_;
};

}  // namespace chargen
