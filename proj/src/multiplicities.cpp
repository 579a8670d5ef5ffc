#include "chargen/multiplicities.hpp"

#include <algorithm>

#include "chargen/calogero.hpp"
#include "chargen/errors.hpp"
#include "chargen/kostant.hpp"

namespace chargen {

namespace {

LaurentPoly swap_t1_t3(const LaurentPoly& p) {
  const VarSet& v = p.vars();
  Bindings b;
  b.emplace("t1", LaurentPoly::variable(v, "t3"));
  b.emplace("t3", LaurentPoly::variable(v, "t1"));
  return poly_subst(p, b, v);
}

}  // namespace

LaurentPoly mult_den_product() {
  const VarSet& v = t_vars();
  const LaurentPoly one(v, 1);
  auto t = [&](const char* n) { return LaurentPoly::variable(v, n); };
  const LaurentPoly t1 = t("t1"), t2 = t("t2"), t3 = t("t3");
  return (one - t1.pow(4)) * (one - t3.pow(4)) * (one - t1 * t3).pow(2) *
         (one - t1.pow(2) * t2) * (one - t2 * t3.pow(2)) * (one - t2.pow(2)).pow(2);
}

MultGenFun build_A(const Weight& n, const GoldenSet& golden) {
  if (!is_dominant(n) || n[0] + n[1] + n[2] > 2)
    throw UnsupportedWeight("no multiplicity generating function for weight " + format_weight(n));
  const VarSet& v = t_vars();
  const LaurentPoly den = golden.poly("a3_mult_D0", v);
  // Stored numerators have n1 >= n3.
  const bool flip = n[2] > n[0];
  const Weight key = flip ? reversed(n) : n;
  const std::string name = "a3_mult_N" + std::to_string(key[0]) + std::to_string(key[1]) +
                           std::to_string(key[2]);
  LaurentPoly num = golden.poly(name, v);
  if (flip) num = swap_t1_t3(num);
  return {n, std::move(num), den};
}

std::map<Weight, Integer> expand_A(const MultGenFun& a, std::span<const int> caps) {
  const TruncatedSeries s =
      series_expand(RationalFn(a.num, a.den), t_vars().names(), {caps.begin(), caps.end()});
  std::map<Weight, Integer> out;
  for (std::size_t i = 0; i < s.box_size(); ++i) {
    const Exponent e = s.exponent(i);
    const LaurentPoly& c = s.coeff(e);
    if (!c.is_zero() && !c.is_constant())
      throw ConsistencyError("multiplicity series coefficient is not a number");
    out.emplace(Weight{e[0], e[1], e[2]}, to_integer(c.constant_term(), "multiplicity"));
  }
  return out;
}

std::pair<Rational, Integer> helpers_ab(const Weight& m) {
  const Integer m1 = m[0], m2 = m[1], m3 = m[2];
  const Rational a = make_rational((m1 + 1) * (m2 + 1) * (m1 + m2 + 2), 2);
  const Integer b = 4 * ((m2 + 1) * (m3 + 1) - 1) - (m1 - m3) * (m1 - m3);
  return {a, b};
}

bool closed_mu_supported(const Weight& n) {
  return n == Weight{0, 0, 0} || n == Weight{0, 1, 0} || n == Weight{1, 0, 1} ||
         n == Weight{0, 2, 0};
}

Integer closed_mu(const Weight& m_in, const Weight& n) {
  if (!is_dominant(m_in))
    throw NonDominantWeight("weight " + format_weight(m_in) + " is not dominant");
  if (!closed_mu_supported(n))
    throw UnsupportedWeight("no closed multiplicity formula for weight " + format_weight(n));
  const Weight m = m_in[0] > m_in[2] ? reversed(m_in) : m_in;
  const int m1 = m[0], m2 = m[1], m3 = m[2];

  // m3 - m1 = 2 (m2 - shift) + 4 p
  const int shift = n[1];
  const int rest = m3 - m1 - 2 * (m2 - shift);
  if (rest % 4 != 0) return 0;
  const int p = rest / 4;

  const auto [a_q, b] = helpers_ab(m);
  const Integer a = to_integer(a_q, "a(m)");
  const Integer f = m1 + 1;
  auto delta = [](auto x, auto y) { return x == y ? 1 : 0; };

  Integer value;
  if (p >= 0) {
    if (n == Weight{0, 0, 0}) {
      value = a;
    } else if (n == Weight{0, 1, 0}) {
      value = a - 2 * f * delta(p, 0);
    } else if (n == Weight{1, 0, 1}) {
      value = a - f * delta(p, 0);
    } else {
      value = a - 2 * f * (delta(p, 1) + 3 * delta(p, 0)) + delta(p, 1) * delta(m2, 0) +
              delta(p, 0) * delta(m2, 2);
    }
    return value;
  }
  Integer eight_mu;
  if (n == Weight{0, 0, 0}) {
    eight_mu = f * (b + 8);
  } else if (n == Weight{0, 1, 0}) {
    eight_mu = f * (b + 4);
  } else if (n == Weight{1, 0, 1}) {
    eight_mu = f * b;
  } else {
    eight_mu = f * (b - 8) + 8 * delta(m1, m3);
  }
  if (eight_mu % 8 != 0)
    throw ConsistencyError("8*mu = " + to_string(eight_mu) + " is not divisible by 8 at m=" +
                           format_weight(m_in) + ", n=" + format_weight(n));
  return eight_mu / 8;
}

std::string_view to_string(MultMethod m) {
  switch (m) {
    case MultMethod::Closed: return "closed";
    case MultMethod::Kostant: return "kostant";
    case MultMethod::GenFun: return "genfun";
    case MultMethod::Direct: return "direct";
  }
  return "?";
}

MultMethod parse_mult_method(std::string_view s) {
  if (s == "closed") return MultMethod::Closed;
  if (s == "kostant") return MultMethod::Kostant;
  if (s == "genfun") return MultMethod::GenFun;
  if (s == "direct") return MultMethod::Direct;
  throw UnknownKind("unknown multiplicity method '" + std::string(s) + "'");
}

Integer multiplicity(const Weight& m, const Weight& n, MultMethod method,
                     const GoldenSet& golden) {
  if (!is_dominant(m)) throw NonDominantWeight("weight " + format_weight(m) + " is not dominant");
  switch (method) {
    case MultMethod::Closed:
      return closed_mu(m, n);
    case MultMethod::Kostant:
      return kostant_multiplicity(m, n);
    case MultMethod::GenFun: {
      const MultGenFun a = build_A(n, golden);
      const RationalFn r(a.num, a.den);
      const TruncatedSeries s = series_expand(r, t_vars().names(), {m[0], m[1], m[2]});
      const LaurentPoly& c = s.coeff(std::span<const int>(m));
      return to_integer(c.constant_term(), "multiplicity");
    }
    case MultMethod::Direct: {
      const LaurentPoly x = char_to_x(solve_character(m), golden);
      return to_integer(x.coefficient(Monomial(std::span<const int>(n))), "multiplicity");
    }
  }
  throw UnknownKind("unknown multiplicity method");
}

}  // namespace chargen
