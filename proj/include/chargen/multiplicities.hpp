#pragma once

#include <map>
#include <span>
#include <string_view>
#include <utility>

#include "chargen/golden.hpp"
#include "chargen/roots.hpp"
#include "chargen/series.hpp"

namespace chargen {

/// Generating function sum_m mu_m(n) t^m for a fixed A3 target weight n,
/// as num / D0 over t1 t2 t3.
struct MultGenFun {
  Weight target;
  LaurentPoly num;
  LaurentPoly den;
};

// n1 + n2 + n3 <= 2; otherwise UnsupportedWeight. Weights (0,0,1), (0,1,1)
// and (0,0,2) reuse the numerators of their diagram flips with t1 <-> t3.
MultGenFun build_A(const Weight& n, const GoldenSet& golden = GoldenSet::embedded());

// (1 - t1^4)(1 - t3^4)(1 - t1 t3)^2 (1 - t1^2 t2)(1 - t2 t3^2)(1 - t2^2)^2
LaurentPoly mult_den_product();

// Every coefficient of the box, keyed by m; values must be integers
// (NonIntegral otherwise). Negative values are returned as-is.
std::map<Weight, Integer> expand_A(const MultGenFun& a, std::span<const int> caps);

// a(m) = (m1+1)(m2+1)(m1+m2+2)/2, b(m) = 4[(m2+1)(m3+1) - 1] - (m1-m3)^2.
std::pair<Rational, Integer> helpers_ab(const Weight& m);

bool closed_mu_supported(const Weight& n);  // (0,0,0) (0,1,0) (1,0,1) (0,2,0)

// Piecewise closed forms for the four self-conjugate targets. Throws
// UnsupportedWeight for any other n, NonDominantWeight for m.
Integer closed_mu(const Weight& m, const Weight& n);

enum class MultMethod { Closed, Kostant, GenFun, Direct };
std::string_view to_string(MultMethod m);
MultMethod parse_mult_method(std::string_view s);  // throws UnknownKind

// mu_m(n) by the chosen route. GenFun needs n1+n2+n3 <= 2, Closed one of
// the four supported targets; both throw UnsupportedWeight otherwise.
Integer multiplicity(const Weight& m, const Weight& n, MultMethod method,
                     const GoldenSet& golden = GoldenSet::embedded());

}  // namespace chargen
