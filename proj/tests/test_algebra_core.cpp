#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "chargen/errors.hpp"
#include "chargen/golden.hpp"
#include "chargen/laurent_poly.hpp"
#include "chargen/poly_text.hpp"
#include "chargen/series.hpp"
#include "support.hpp"

using namespace chargen;
using testing::P;

namespace {
const VarSet X{"x"};
const VarSet T{"t"};
}  // namespace

TEST_CASE("rationals are canonical") {
  CHECK(make_rational(4, 6) == make_rational(2, 3));
  CHECK(to_string(make_rational(-30, 4)) == "-15/2");
  CHECK(to_string(make_rational(6, 3)) == "2");
  CHECK(is_integer(make_rational(6, 3)));
  CHECK_THROWS_AS(to_integer(make_rational(1, 2)), NonIntegral);
}

TEST_CASE("varsets") {
  const VarSet v{"a", "b"};
  CHECK(v.require("b") == 1);
  CHECK_THROWS_AS(v.require("c"), UnknownVariable);
  CHECK_THROWS(VarSet{"a", "a"});
  CHECK(VarSet{"a", "b"} == v);
  CHECK_FALSE(VarSet{"b", "a"} == v);
}

TEST_CASE("poly_mul examples") {
  CHECK(P("1 + x", X) * P("1 - x", X) == P("1 - x^2", X));
  const VarSet z = z_vars();
  CHECK(P("z1", z) * LaurentPoly(z, 1) == P("z1", z));
  CHECK((P("x + x^-1", X)).pow(2) == P("x^2 + 2 + x^-2", X));
  CHECK_THROWS_AS(poly_mul(P("x", X), P("t", T)), VarSetMismatch);
}

TEST_CASE("poly_exact_div examples") {
  CHECK(poly_exact_div(P("1 - x^2", X), P("1 - x", X)) == P("1 + x", X));
  CHECK(poly_exact_div(P("x^2 - x^-2", X), P("x - x^-1", X)) == P("x + x^-1", X));
  CHECK_THROWS_AS(poly_exact_div(P("1 + x", X), P("1 - x", X)), InexactDivision);
  CHECK_THROWS(poly_exact_div(P("x", X), LaurentPoly(X)));
}

TEST_CASE("poly_subst examples") {
  const LaurentPoly chi = P("x1 + x2*x1^-1 + x3*x2^-1 + x3^-1", x_vars());
  Bindings b;
  b.emplace("z1", chi);
  CHECK(poly_subst(P("z1", z_vars()), b, x_vars()) == chi);

  Bindings dims;
  dims.emplace("z1", LaurentPoly(VarSet{}, 4));
  dims.emplace("z2", LaurentPoly(VarSet{}, 6));
  CHECK(poly_subst(P("z1^2 - z2", z_vars()), dims, VarSet{}) == LaurentPoly(VarSet{}, 10));
  CHECK(poly_subst(LaurentPoly(z_vars(), 1), b, x_vars()) == LaurentPoly(x_vars(), 1));

  Bindings bad;
  bad.emplace("x", P("1 + t", T));
  CHECK_THROWS_AS(poly_subst(P("x^-1", X), bad, T), NonInvertibleBinding);
  Bindings mono;
  mono.emplace("x", P("2*t", T));
  CHECK(poly_subst(P("x^-2", X), mono, T) == P("1/4*t^-2", T));
}

TEST_CASE("poly_diff examples") {
  CHECK(poly_diff(P("z1^2*z2", z_vars()), "z1") == P("2*z1*z2", z_vars()));
  CHECK(poly_diff(P("x^-1", X), "x") == P("-x^-2", X));
  CHECK(poly_diff(P("z1", z_vars()), "z3").is_zero());
  CHECK_THROWS_AS(poly_diff(P("x", X), "y"), UnknownVariable);
}

TEST_CASE("canonical text format") {
  const VarSet v = tz_vars();
  const LaurentPoly d1 = P("t1^4 - t1^3*z3 + t1^2*z2 - t1*z1 + 1", v);
  CHECK(format_poly(d1) == "1 - t1*z1 + t1^2*z2 - t1^3*z3 + t1^4");
  CHECK(format_poly(LaurentPoly(v)) == "0");
  CHECK(format_poly(P("15/2*z1", z_vars())) == "15/2*z1");
  CHECK(format_poly(P("x^-1", X)) == "x^-1");
  CHECK(P("# comment\n2*(x + 1)^2 - -x", X) == P("2 + 5*x + 2*x^2", X));
  CHECK_THROWS_AS(parse_poly("x +", X), ParseError);
  CHECK_THROWS_AS(parse_poly("y", X), ParseError);
  CHECK_THROWS_AS(parse_poly("x^", X), ParseError);
  CHECK_THROWS_AS(parse_poly("1/0", X), ParseError);
}

TEST_CASE("ring laws and round trips on random polynomials") {
  std::mt19937 rng(20240611);
  const VarSet v{"a", "b", "c"};
  for (int i = 0; i < 150; ++i) {
    const LaurentPoly p = testing::random_poly(rng, v, 6, -2, 3);
    const LaurentPoly q = testing::random_poly(rng, v, 6, -2, 3);
    const LaurentPoly r = testing::random_poly(rng, v, 6, -2, 3);
    CHECK(p * q == q * p);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p + q == q + p);
    CHECK((p - p).is_zero());
    if (!q.is_zero()) {
      CHECK(poly_exact_div(p * q, q) == p);
    }
    CHECK(parse_poly(format_poly(p), v) == p);
    for (const char* name : {"a", "b"})
      CHECK(poly_diff(p * q, name) == poly_diff(p, name) * q + p * poly_diff(q, name));
  }
}

TEST_CASE("series_expand examples") {
  const std::vector<int> three{3};
  const TruncatedSeries s = series_expand(RationalFn(LaurentPoly(T, 1), P("1 - t", T)), {"t"}, three);
  for (int k = 0; k <= 3; ++k) {
    const int e[] = {k};
    CHECK(s.coeff(e) == LaurentPoly(s.coeff_vars(), 1));
  }

  const VarSet v{"t1", "z1", "z2", "z3"};
  const RationalFn r(LaurentPoly(v, 1), P("1 - t1*z1 + t1^2*z2 - t1^3*z3 + t1^4", v));
  const TruncatedSeries d1 = series_expand(r, {"t1"}, {2});
  const int one[] = {1}, two[] = {2};
  CHECK(d1.coeff(one) == P("z1", z_vars()));
  CHECK(d1.coeff(two) == P("z1^2 - z2", z_vars()));

  CHECK_THROWS_AS(series_expand(RationalFn(LaurentPoly(T, 1), P("t", T)), {"t"}, three),
                  DenominatorNotUnit);
  CHECK_THROWS_AS(series_expand(RationalFn(LaurentPoly(v, 1), P("z1 - t1", v)), {"t1"}, three),
                  DenominatorNotUnit);
}

TEST_CASE("coeff examples") {
  const TruncatedSeries s = TruncatedSeries::truncate(P("1 + 2*t", T), T, {1});
  const int one[] = {1}, five[] = {5};
  CHECK(coeff(s, one) == LaurentPoly(s.coeff_vars(), 2));
  CHECK_THROWS_AS(coeff(s, five), ExponentOutOfCaps);
  CHECK(format_exponent(std::vector<int>{1, 0, 2}) == "(1,0,2)");
}

TEST_CASE("series times denominator gives the numerator back") {
  std::mt19937 rng(7);
  const VarSet v{"t1", "t2", "y"};
  const VarSet tv{"t1", "t2"};
  const std::vector<int> caps{4, 3};
  const LaurentPoly t1 = P("t1", v), t2 = P("t2", v);
  for (int i = 0; i < 40; ++i) {
    const LaurentPoly num = testing::random_poly(rng, v, 5, 0, 3);
    const LaurentPoly den = LaurentPoly(v, 1) + t1 * testing::random_poly(rng, v, 3, 0, 2) +
                            t2 * testing::random_poly(rng, v, 3, 0, 2);
    const TruncatedSeries s = series_expand(RationalFn(num, den), {"t1", "t2"}, caps);
    CHECK(s * TruncatedSeries::truncate(den, tv, caps) == TruncatedSeries::truncate(num, tv, caps));
  }
}

TEST_CASE("golden set") {
  const GoldenSet& g = GoldenSet::embedded();
  CHECK(g.names().size() == 30);
  CHECK(g.poly("a3_D1", tz_vars()) == P("1 - t1*z1 + t1^2*z2 - t1^3*z3 + t1^4", tz_vars()));
  CHECK_THROWS(g.text("missing"));

  const auto dir = std::filesystem::temp_directory_path() / "chargen_golden_overlay_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "a3_D1.poly") << "1 + t1\n";
  const GoldenSet overlay = GoldenSet::from_directory(dir);
  CHECK(overlay.poly("a3_D1", tz_vars()) == P("1 + t1", tz_vars()));
  CHECK(overlay.text("a3_N") == g.text("a3_N"));
  std::filesystem::remove_all(dir);

  const GoldenSet o = g.with_override("a3_P", "1 +");
  CHECK_THROWS_AS(o.poly("a3_P", t_vars()), ParseError);
}
