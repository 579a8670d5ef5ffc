#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "chargen/monomial.hpp"
#include "chargen/rational.hpp"
#include "chargen/varset.hpp"

namespace chargen {

/// Sparse multivariate Laurent polynomial with rational coefficients.
///
/// Terms are kept sorted by ascending graded-lex monomial order with no zero
/// coefficients, so two polynomials are equal iff their term lists are equal.
/// Values are immutable once built; arithmetic returns new values.
class LaurentPoly {
 public:
  struct Term {
    Monomial monomial;
    Rational coefficient;
    friend bool operator==(const Term&, const Term&) = default;
  };

  explicit LaurentPoly(VarSet vars = {});
  LaurentPoly(VarSet vars, const Rational& constant);

  static LaurentPoly variable(const VarSet& vars, std::string_view name);
  static LaurentPoly monomial(const VarSet& vars, const Monomial& m,
                              const Rational& c = 1);
  // Merges duplicate monomials and drops zeros.
  static LaurentPoly from_terms(VarSet vars, std::vector<Term> terms);

  const VarSet& vars() const { return vars_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const { return coefficient(Monomial{}); }
  // Greatest term in graded-lex order. Precondition: nonzero.
  const Term& leading_term() const;
  // Componentwise minimum exponent over all terms (zero for the zero poly).
  Monomial min_exponents() const;
  bool has_negative_exponents() const;
  // Largest exponent of variable `i` (0 for the zero poly).
  int max_degree(std::size_t i) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

  // Multiply by c * x^m.
  LaurentPoly shifted(const Monomial& m, const Rational& c = 1) const;
  LaurentPoly pow(unsigned k) const;
  // Rebuild over `target`, matching variables by name. Throws UnknownVariable
  // if a variable that actually occurs is missing from `target`.
  LaurentPoly embed(const VarSet& target) const;
  // Sum of coefficients (value at the all-ones point).
  Rational coefficient_sum() const;

  std::string to_string() const;

 private:
  VarSet vars_;
  std::vector<Term> terms_;
};

/// Hash-based scratch space for building a polynomial term by term.
class PolyAccumulator {
 public:
  explicit PolyAccumulator(VarSet vars) : vars_(std::move(vars)) {}

  void add(const Monomial& m, const Rational& c);
  void add(const LaurentPoly& p);
  void add_scaled(const LaurentPoly& p, const Rational& c, const Monomial& shift = {});
  // acc += scale * a * b
  void add_product(const LaurentPoly& a, const LaurentPoly& b, const Rational& scale = 1);

  LaurentPoly take();

 private:
  VarSet vars_;
  std::unordered_map<Monomial, Rational, Monomial::Hash> acc_;
};

using Bindings = std::map<std::string, LaurentPoly, std::less<>>;

// Throws VarSetMismatch unless both operands share a VarSet.
LaurentPoly poly_mul(const LaurentPoly& p, const LaurentPoly& q);

// Exact quotient q with q * d == p; throws InexactDivision otherwise.
LaurentPoly poly_exact_div(const LaurentPoly& p, const LaurentPoly& d);

// Substitute variables of p by polynomials over `target`. Unbound variables
// are carried over by name and must exist in `target`. A variable occurring
// with a negative exponent needs a binding that is a single term.
LaurentPoly poly_subst(const LaurentPoly& p, const Bindings& bindings, const VarSet& target);
// Target ring taken from the bindings (or p's own ring when there are none).
LaurentPoly poly_subst(const LaurentPoly& p, const Bindings& bindings);

LaurentPoly poly_diff(const LaurentPoly& p, std::string_view var);

}  // namespace chargen
