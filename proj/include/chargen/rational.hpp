#pragma once

#include <gmpxx.h>

#include <string>

namespace chargen {

using Rational = mpq_class;
using Integer = mpz_class;

// "3", "-15/2"
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Canonicalized num/den (mpq_class's two-argument constructor is not).
inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Throws NonIntegral when q has a nontrivial denominator.
Integer to_integer(const Rational& q, const char* what = "value");

}  // namespace chargen
