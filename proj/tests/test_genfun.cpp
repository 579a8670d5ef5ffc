#include <doctest.h>

#include "chargen/errors.hpp"
#include "chargen/genfun.hpp"
#include "chargen/poly_text.hpp"
#include "support.hpp"

using namespace chargen;
using testing::P;

namespace {

LaurentPoly Z(std::string_view s) { return P(s, z_vars()); }

const LaurentPoly& at(const TruncatedSeries& s, std::initializer_list<int> e) {
  const std::vector<int> v(e);
  return s.coeff(v);
}

// z_i bound to the algebra's fundamental characters in x.
Bindings fundamentals(Algebra a) {
  const RootSystem& sys = RootSystem::get(a);
  Bindings b;
  b.emplace("z1", weyl_character(sys, {1, 0, 0}));
  b.emplace("z2", weyl_character(sys, {0, 1, 0}));
  b.emplace("z3", weyl_character(sys, {0, 0, 1}));
  return b;
}

// G with one numerator term's sign flipped.
GoldenSet flipped_N(std::size_t which) {
  const GoldenSet& g = GoldenSet::embedded();
  const LaurentPoly n = g.poly("a3_N", tz_vars());
  const LaurentPoly::Term t = n.terms()[which];
  const LaurentPoly bad =
      n - Rational(2) * LaurentPoly::from_terms(n.vars(), std::vector<LaurentPoly::Term>{t});
  return g.with_override("a3_N", format_poly(bad));
}

}  // namespace

TEST_CASE("G coefficients") {
  const TruncatedSeries s = expand_genfun(build_G(), std::vector<int>{3, 3, 3});
  CHECK(at(s, {0, 0, 0}) == Z("1"));
  CHECK(at(s, {1, 0, 0}) == Z("z1"));
  CHECK(at(s, {0, 1, 0}) == Z("z2"));
  CHECK(at(s, {1, 0, 1}) == Z("z1*z3 - 1"));
  CHECK(at(s, {2, 0, 0}) == Z("z1^2 - z2"));
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int c = 0; c <= 3; ++c) CHECK(at(s, {a, b, c}) == solve_character({a, b, c}).body);
}

TEST_CASE("E gives dimensions") {
  const RootSystem& A3 = RootSystem::get(Algebra::A3);
  const TruncatedSeries s = expand_genfun(build_E(), std::vector<int>{4, 4, 4});
  CHECK(at(s, {1, 0, 0}).constant_term() == 4);
  CHECK(at(s, {1, 0, 1}).constant_term() == 15);
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b)
      for (int c = 0; c <= 4; ++c)
        CHECK(at(s, {a, b, c}).constant_term() == weyl_dim(A3, {a, b, c}));
}

TEST_CASE("real generating functions") {
  const GenFun gr = build_G_real();
  CHECK(gr.expansion_vars == std::vector<std::string>{"t1", "t2"});
  const TruncatedSeries s = expand_genfun(gr, std::vector<int>{4, 4});
  CHECK(at(s, {1, 0}) == Z("z1*z3 - 1"));
  CHECK(at(s, {0, 1}) == Z("z2"));
  const TruncatedSeries e = expand_genfun(build_E_real(), std::vector<int>{6, 6});
  CHECK(at(e, {1, 0}).constant_term() == 15);
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b) CHECK(at(s, {a, b}) == solve_character({a, b, a}).body);
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; b <= 6; ++b)
      CHECK(at(e, {a, b}).constant_term() == a3_real_dim_formula(a, b));
}

TEST_CASE("restricted B3 and C3 series") {
  struct Case {
    Algebra alg;
    RestrictedKind kind;
  };
  const Case cases[] = {{Algebra::B3, RestrictedKind::First}, {Algebra::B3, RestrictedKind::Third},
                        {Algebra::B3, RestrictedKind::Mixed}, {Algebra::C3, RestrictedKind::First},
                        {Algebra::C3, RestrictedKind::Third}, {Algebra::C3, RestrictedKind::Mixed}};
  for (const Case& c : cases) {
    const GenFun g = build_restricted(c.alg, c.kind);
    CAPTURE(g.name);
    const RootSystem& sys = RootSystem::get(c.alg);
    const Bindings b = fundamentals(c.alg);
    const int cap = c.kind == RestrictedKind::Mixed ? 3 : 5;
    const std::vector<int> caps(g.expansion_vars.size(), cap);
    const TruncatedSeries s = expand_genfun(g, caps);
    for (std::size_t i = 0; i < s.box_size(); ++i) {
      const Exponent e = s.exponent(i);
      Weight m{0, 0, 0};
      if (c.kind == RestrictedKind::First) m[0] = e[0];
      if (c.kind == RestrictedKind::Third) m[2] = e[0];
      if (c.kind == RestrictedKind::Mixed) m = {e[0], 0, e[1]};
      CAPTURE(format_weight(m));
      CHECK(poly_subst(s.coeff(e), b, x_vars()) == weyl_character(sys, m));
    }
  }
  const TruncatedSeries first =
      expand_genfun(build_restricted(Algebra::B3, RestrictedKind::First), std::vector<int>{1});
  CHECK(at(first, {1}) == Z("z1"));
  const TruncatedSeries third =
      expand_genfun(build_restricted(Algebra::C3, RestrictedKind::Third), std::vector<int>{1});
  CHECK(at(third, {1}) == Z("z3"));
  CHECK(build_restricted(Algebra::B3, RestrictedKind::Mixed).name == "b3_mixed");
  CHECK_THROWS_AS(build_restricted(Algebra::A3, RestrictedKind::First), UnknownKind);
  CHECK(parse_restricted_kind("spinor") == RestrictedKind::Third);
  CHECK(to_string(RestrictedKind::Mixed) == "mixed");
  CHECK_THROWS_AS(parse_restricted_kind("second"), UnknownKind);
}

TEST_CASE("Delta_t operators") {
  const VarSet t = t_vars();
  CHECK(delta_t().apply(P("t1", t)) == P("15/2*t1", t));
  CHECK(delta_t().apply(LaurentPoly(t, 1)).is_zero());
  CHECK(delta_t().apply(P("t1*t3", t)) == P("16*t1*t3", t));

  // m1 = m3 in the A3 form, written out by hand.
  const VarSet r{"t1", "t2"};
  DiffOperator expect(r);
  expect.add_term(P("4*t1^2", r), std::vector<std::string>{"t1", "t1"});
  expect.add_term(P("4*t1*t2", r), std::vector<std::string>{"t1", "t2"});
  expect.add_term(P("16*t1", r), std::vector<std::string>{"t1"});
  expect.add_term(P("2*t2^2", r), std::vector<std::string>{"t2", "t2"});
  expect.add_term(P("10*t2", r), std::vector<std::string>{"t2"});
  CHECK(delta_t_real() == expect);
  CHECK(delta_t_real().to_string() == expect.to_string());
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b) {
      const LaurentPoly mono = LaurentPoly::from_terms(
          r, std::vector<LaurentPoly::Term>{{Monomial{a, b}, Rational(1)}});
      CHECK(delta_t_real().apply(mono) == eigenvalue({a, b, a}) * mono);
    }
}

TEST_CASE("PDE holds on the box") {
  CHECK(verify_pde(build_G(), delta_t(), std::vector<int>{4, 4, 4}).is_zero());
  CHECK(verify_pde(build_G_real(), delta_t_real(), std::vector<int>{6, 6}).is_zero());
  CHECK_THROWS_AS(verify_pde(build_G_real(), delta_t(), std::vector<int>{2, 2}), VarSetMismatch);
}

TEST_CASE("PDE fails for a corrupted numerator") {
  const std::size_t n_terms = GoldenSet::embedded().poly("a3_N", tz_vars()).size();
  for (std::size_t i = 0; i < n_terms; ++i) {
    const TruncatedSeries r = verify_pde(build_G(flipped_N(i)), delta_t(), std::vector<int>{6, 6, 6});
    CHECK_FALSE(r.is_zero());
    CHECK(r.first_nonzero().has_value());
  }
}

TEST_CASE("symbolic PDE numerator") {
  const VarSet v{"t1", "z1", "z2", "z3"};
  const GenFun d1{"d1", {"t1"},
                  RationalFn(LaurentPoly(v, 1), P("1 - t1*z1 + t1^2*z2 - t1^3*z3 + t1^4", v))};
  EigenForm first(1);
  first.set_quadratic(0, 0, EigenForm::a3().quadratic(0, 0));
  first.set_linear(0, EigenForm::a3().linear(0));
  const DiffOperator op = delta_t_from_eigen(first, VarSet{"t1"});
  CHECK(pde_numerator(d1, op).is_zero());

  const GenFun wrong{"d1", {"t1"}, RationalFn(P("1 + t1", v), d1.fn.den)};
  CHECK_FALSE(pde_numerator(wrong, op).is_zero());
}

TEST_CASE("symbolic PDE numerator for the real series") {
  CHECK(pde_numerator(build_G_real(), delta_t_real()).is_zero());
}
