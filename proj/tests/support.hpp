#pragma once

#include <random>

#include "chargen/poly_text.hpp"

namespace testing {

inline chargen::LaurentPoly P(std::string_view text, const chargen::VarSet& vars) {
  return chargen::parse_poly(text, vars);
}

// Small random Laurent polynomial: up to `terms` terms, exponents in
// [lo, hi], coefficients n/d with |n| <= 5, d in 1..3.
inline chargen::LaurentPoly random_poly(std::mt19937& rng, const chargen::VarSet& vars,
                                        int terms, int lo, int hi) {
  std::uniform_int_distribution<int> count(0, terms), expo(lo, hi), num(-5, 5), den(1, 3);
  std::vector<chargen::LaurentPoly::Term> out;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(vars.size());
    for (int& x : e) x = expo(rng);
    out.push_back({chargen::Monomial(e), chargen::make_rational(num(rng), den(rng))});
  }
  return chargen::LaurentPoly::from_terms(vars, std::move(out));
}

}  // namespace testing
