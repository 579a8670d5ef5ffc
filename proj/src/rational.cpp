#include "chargen/rational.hpp"

#include "chargen/errors.hpp"

namespace chargen {

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Integer& z) { return z.get_str(); }

Integer to_integer(const Rational& q, const char* what) {
  if (!is_integer(q))
    throw NonIntegral(std::string(what) + " is not an integer: " + q.get_str());
  return q.get_num();
}

}  // namespace chargen
