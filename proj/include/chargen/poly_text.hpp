#pragma once

#include <string>
#include <string_view>

#include "chargen/laurent_poly.hpp"

namespace chargen {

// Canonical text form: terms in ascending graded-lex order, e.g.
//   1 - t1*z1 + t1^2*z2 - t1^3*z3 + t1^4
// Rational coefficients print as "15/2*z1", negative exponents as "x1^-1".
std::string format_poly(const LaurentPoly& p);

// Parses the canonical form and, more generally, any expression built from
// integer/rational literals, variables of `vars`, + - *, parentheses and
// integer powers (negative powers only of single terms). Lines starting with
// '#' are comments. Throws ParseError with the offending position.
LaurentPoly parse_poly(std::string_view text, const VarSet& vars);

}  // namespace chargen
