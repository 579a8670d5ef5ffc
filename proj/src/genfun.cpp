#include "chargen/genfun.hpp"

#include <algorithm>
#include <cctype>

#include "chargen/errors.hpp"

namespace chargen {

namespace {

const VarSet& real_vars() {
  static const VarSet v{"t1", "t2", "z1", "z2", "z3"};
  return v;
}

LaurentPoly one_minus(const VarSet& vars, std::string_view name) {
  return LaurentPoly(vars, 1) - LaurentPoly::variable(vars, name);
}

}  // namespace

GenFun build_G(const GoldenSet& golden) {
  const VarSet& v = tz_vars();
  const LaurentPoly den =
      golden.poly("a3_D1", v) * golden.poly("a3_D2", v) * golden.poly("a3_D3", v);
  return {"G", {"t1", "t2", "t3"}, RationalFn(golden.poly("a3_N", v), den)};
}

GenFun build_E(const GoldenSet& golden) {
  const VarSet& v = t_vars();
  const LaurentPoly den =
      one_minus(v, "t1").pow(4) * one_minus(v, "t2").pow(6) * one_minus(v, "t3").pow(4);
  return {"E", {"t1", "t2", "t3"}, RationalFn(golden.poly("a3_P", v), den)};
}

GenFun build_G_real(const GoldenSet& golden) {
  const VarSet& v = real_vars();
  // D2 is shared with G and only involves t2.
  const LaurentPoly d2 = golden.poly("a3_D2", tz_vars()).embed(v);
  return {"G_R", {"t1", "t2"}, RationalFn(golden.poly("a3_NR", v), golden.poly("a3_D13", v) * d2)};
}

GenFun build_E_real(const GoldenSet& golden) {
  const VarSet v{"t1", "t2"};
  const LaurentPoly num =
      one_minus(v, "t1").pow(6) * one_minus(v, "t2") * golden.poly("a3_PR", v);
  const LaurentPoly den = one_minus(v, "t1").pow(12) * one_minus(v, "t2").pow(6);
  return {"E_R", {"t1", "t2"}, RationalFn(num, den)};
}

std::string_view to_string(RestrictedKind k) {
  switch (k) {
    case RestrictedKind::First: return "first";
    case RestrictedKind::Third: return "third";
    case RestrictedKind::Mixed: return "mixed";
  }
  return "?";
}

RestrictedKind parse_restricted_kind(std::string_view s) {
  std::string lower(s);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "first") return RestrictedKind::First;
  if (lower == "third" || lower == "spinor") return RestrictedKind::Third;
  if (lower == "mixed") return RestrictedKind::Mixed;
  throw UnknownKind("unknown restricted kind '" + std::string(s) +
                    "' (expected first, third or mixed)");
}

GenFun build_restricted(Algebra algebra, RestrictedKind kind, const GoldenSet& golden) {
  if (algebra == Algebra::A3)
    throw UnknownKind("restricted generating functions exist for b3 and c3 only");
  const std::string prefix(to_string(algebra));
  const std::string name = prefix + "_" + std::string(to_string(kind));
  const VarSet first{"t1", "z1", "z2", "z3"};
  const VarSet third{"t3", "z1", "z2", "z3"};
  switch (kind) {
    case RestrictedKind::First:
      return {name, {"t1"},
              RationalFn(golden.poly(prefix + "_first_num", first),
                         golden.poly(prefix + "_first_den", first))};
    case RestrictedKind::Third:
      return {name, {"t3"},
              RationalFn(golden.poly(prefix + "_third_num", third),
                         golden.poly(prefix + "_third_den", third))};
    case RestrictedKind::Mixed: {
      const VarSet both{"t1", "t3", "z1", "z2", "z3"};
      const LaurentPoly den = golden.poly(prefix + "_first_den", first).embed(both) *
                              golden.poly(prefix + "_third_den", third).embed(both);
      return {name, {"t1", "t3"}, RationalFn(golden.poly(prefix + "_mixed_num", both), den)};
    }
  }
  throw UnknownKind("unknown restricted kind");
}

DiffOperator delta_t_from_eigen(const EigenForm& e, const VarSet& vars) {
  if (e.size() != vars.size()) throw Error("eigenform arity does not match the variables");
  DiffOperator op(vars);
  auto t = [&](std::size_t i) { return LaurentPoly::variable(vars, vars.name(i)); };
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const std::string& ti = vars.name(i);
    const Rational& q = e.quadratic(i, i);
    if (q != 0) {
      op.add_term(q * t(i).pow(2), std::vector<std::string>{ti, ti});
      op.add_term(q * t(i), std::vector<std::string>{ti});
    }
    for (std::size_t j = i + 1; j < vars.size(); ++j) {
      const Rational& c = e.quadratic(i, j);
      if (c != 0) op.add_term(c * t(i) * t(j), std::vector<std::string>{ti, vars.name(j)});
    }
    if (e.linear(i) != 0) op.add_term(e.linear(i) * t(i), std::vector<std::string>{ti});
  }
  return op;
}

const DiffOperator& delta_t() {
  static const DiffOperator op = delta_t_from_eigen(EigenForm::a3(), t_vars());
  return op;
}

const DiffOperator& delta_t_real() {
  static const DiffOperator op = [] {
    const std::size_t map[] = {0, 1, 0};
    return delta_t_from_eigen(EigenForm::a3().substitute(map, 2), VarSet{"t1", "t2"});
  }();
  return op;
}

TruncatedSeries expand_genfun(const GenFun& g, std::span<const int> caps) {
  return series_expand(g.fn, g.expansion_vars, {caps.begin(), caps.end()});
}

TruncatedSeries verify_pde(const GenFun& g, const DiffOperator& op_t, std::span<const int> caps,
                           const DiffOperator& op_z) {
  if (!(op_t.vars() == g.expansion_varset()))
    throw VarSetMismatch("operator over " + op_t.vars().to_string() +
                         " does not match expansion variables of " + g.name);
  const TruncatedSeries s = expand_genfun(g, caps);
  const TruncatedSeries zs = s.map_coefficients([&](const LaurentPoly& c) {
    return op_z.apply(c.embed(op_z.vars())).embed(s.coeff_vars());
  });
  return op_t.apply(s) - zs;
}

LaurentPoly pde_numerator(const GenFun& g, const DiffOperator& op_t, const DiffOperator& op_z) {
  const VarSet& v = g.fn.num.vars();
  const DiffOperator op = op_t.embed(v) - op_z.embed(v);
  if (op.order() > 2) throw Error("pde_numerator handles operators of order at most 2");
  const LaurentPoly& n = g.fn.num;
  const LaurentPoly& d = g.fn.den;
  const LaurentPoly d2 = d * d;

  PolyAccumulator acc(v);
  for (const auto& [orders, c] : op.terms()) {
    std::vector<std::string> wrt;
    for (std::size_t i = 0; i < orders.size(); ++i)
      for (int k = 0; k < orders[i]; ++k) wrt.push_back(v.name(i));
    // D^3 * d^alpha (N / D), written out for |alpha| <= 2.
    LaurentPoly term(v);
    if (wrt.empty()) {
      term = n * d2;
    } else if (wrt.size() == 1) {
      term = (poly_diff(n, wrt[0]) * d - n * poly_diff(d, wrt[0])) * d;
    } else {
      const std::string& a = wrt[0];
      const std::string& b = wrt[1];
      const LaurentPoly na = poly_diff(n, a), nb = poly_diff(n, b);
      const LaurentPoly da = poly_diff(d, a), db = poly_diff(d, b);
      term = poly_diff(na, b) * d2 - (na * db + nb * da + n * poly_diff(da, b)) * d +
             Rational(2) * n * da * db;
    }
    acc.add_product(c, term);
  }
  return acc.take();
}

}  // namespace chargen
