#include <doctest.h>

#include <set>

#include "chargen/errors.hpp"
#include "chargen/golden.hpp"
#include "chargen/kostant.hpp"
#include "chargen/roots.hpp"
#include "support.hpp"

using namespace chargen;
using testing::P;

namespace {

const RootSystem& A3 = RootSystem::get(Algebra::A3);
const RootSystem& B3 = RootSystem::get(Algebra::B3);
const RootSystem& C3 = RootSystem::get(Algebra::C3);

// Count non-negative combinations of the six positive A3 roots by brute force.
long brute_kostant(int k1, int k2, int k3) {
  long count = 0;
  // a1+a2+a3 (c6), a1+a2 (c4), a2+a3 (c5); the simple roots take the rest.
  for (int c6 = 0; c6 <= std::min({k1, k2, k3}); ++c6)
    for (int c4 = 0; c4 <= std::min(k1, k2) - c6; ++c4)
      for (int c5 = 0; c5 <= std::min(k2 - c6 - c4, k3 - c6); ++c5)
        ++count;  // c1 = k1-c6-c4, c2 = k2-c6-c4-c5, c3 = k3-c6-c5 are then fixed and >= 0
  return count;
}

std::set<Weight> orbit(const RootSystem& sys, const Weight& w) {
  std::set<Weight> out;
  for (const auto& g : sys.weyl_group()) out.insert(g.apply(w));
  return out;
}

}  // namespace

TEST_CASE("Weyl group orders and signs") {
  CHECK(A3.weyl_group().size() == 24);
  CHECK(B3.weyl_group().size() == 48);
  CHECK(C3.weyl_group().size() == 48);
  CHECK(enumerate_weyl(A3).front().sign == 1);
  CHECK(A3.positive_roots().size() == 6);
  CHECK(B3.positive_roots().size() == 9);
  CHECK(C3.positive_roots().size() == 9);
  int plus = 0;
  for (const auto& w : B3.weyl_group()) plus += w.sign > 0;
  CHECK(plus == 24);
  // every element maps rho to a distinct regular weight
  CHECK(orbit(A3, RootSystem::rho()).size() == 24);
  CHECK(orbit(C3, RootSystem::rho()).size() == 48);
}

TEST_CASE("root coordinates") {
  auto eq = [](const RootCoords& r, int a, int b, int c) {
    return r.k[0] == a && r.k[1] == b && r.k[2] == c;
  };
  CHECK(eq(A3.to_root_coords({2, -1, 0}), 1, 0, 0));
  CHECK(eq(A3.to_root_coords(RootSystem::rho() - RootSystem::rho()), 0, 0, 0));
  CHECK(eq(A3.to_root_coords({1, 0, 1}), 1, 1, 1));
  CHECK_FALSE(A3.to_root_coords({1, 0, 0}).integral());
  CHECK(A3.from_root_coords({1, 1, 1}) == Weight{1, 0, 1});
}

TEST_CASE("A3 fundamental characters match the golden z(x)") {
  const GoldenSet& g = GoldenSet::embedded();
  CHECK(weyl_character(A3, {1, 0, 0}) == g.poly("a3_chi_100", x_vars()));
  CHECK(weyl_character(A3, {0, 1, 0}) == g.poly("a3_chi_010", x_vars()));
  CHECK(weyl_character(A3, {0, 0, 1}) == g.poly("a3_chi_001", x_vars()));
  CHECK(weyl_character(A3, {1, 0, 0}) == P("x1 + x2*x1^-1 + x3*x2^-1 + x3^-1", x_vars()));
  CHECK(weyl_character(A3, {0, 0, 0}) == LaurentPoly(x_vars(), 1));
  CHECK_THROWS_AS(weyl_character(A3, {-1, 0, 0}), NonDominantWeight);
}

TEST_CASE("B3 spinor and minuscule orbits") {
  const LaurentPoly spinor = weyl_character(B3, {0, 0, 1});
  CHECK(spinor.size() == 8);
  for (const auto& t : spinor.terms()) CHECK(t.coefficient == 1);
  CHECK(weyl_dim(B3, {0, 0, 1}) == 8);
  CHECK(weyl_dim(B3, {1, 0, 0}) == 7);
  CHECK(weyl_dim(C3, {1, 0, 0}) == 6);
  CHECK(weyl_dim(C3, {0, 1, 0}) == 14);
  CHECK(weyl_dim(B3, {0, 1, 0}) == 21);
  CHECK(orbit(C3, {1, 0, 0}).size() == 6);
}

TEST_CASE("Weyl dimension formula") {
  CHECK(weyl_dim(A3, {1, 0, 0}) == 4);
  CHECK(weyl_dim(A3, {1, 0, 1}) == 15);
  CHECK_THROWS_AS(weyl_dim(A3, {0, -1, 0}), NonDominantWeight);
  for (int a = 0; a <= 10; ++a)
    for (int b = 0; b <= 10; ++b) {
      CHECK(weyl_dim(A3, {a, b, a}) == a3_real_dim_formula(a, b));
      const Integer direct = Integer(a + 1) * (a + 1) * (b + 1) * (a + b + 2) * (a + b + 2) *
                             (2 * a + b + 3) / 12;
      CHECK(a3_real_dim_formula(a, b) == direct);
    }
}

TEST_CASE("character sums, diagram flip and Kostant agreement") {
  for (int s = 0; s <= 4; ++s)
    for (int a = 0; a <= s; ++a)
      for (int b = 0; a + b <= s; ++b) {
        const Weight m{a, b, s - a - b};
        for (const RootSystem* sys : {&A3, &B3, &C3}) {
          const LaurentPoly chi = weyl_character(*sys, m);
          CHECK(chi.coefficient_sum() == weyl_dim(*sys, m));
        }
        const LaurentPoly chi = weyl_character(A3, m);
        // x -> x^-1 gives the dual, whose highest weight is the flipped one;
        // relabelling x1 <-> x3 gives the same representation.
        std::vector<LaurentPoly::Term> inv, rev;
        for (const auto& t : chi.terms()) {
          inv.push_back({t.monomial.pow(-1), t.coefficient});
          rev.push_back({Monomial{t.monomial[2], t.monomial[1], t.monomial[0]}, t.coefficient});
        }
        const LaurentPoly flipped = weyl_character(A3, reversed(m));
        CHECK(LaurentPoly::from_terms(x_vars(), std::move(inv)) == flipped);
        CHECK(LaurentPoly::from_terms(x_vars(), std::move(rev)) == flipped);
        for (const auto& t : chi.terms()) {
          const Weight n{t.monomial[0], t.monomial[1], t.monomial[2]};
          CHECK(kostant_multiplicity(m, n) == t.coefficient);
        }
      }
}

TEST_CASE("Kostant partition function") {
  CHECK(kostant_Z(0, 0, 0) == 1);
  CHECK(kostant_Z(1, 1, 1) == 4);
  CHECK(kostant_Z(1, 0, 1) == 1);
  CHECK(kostant_Z(-1, 0, 0) == 0);
  CHECK(kostant_Z(A3.to_root_coords({1, 0, 0})) == 0);
  for (int a = 0; a <= 9; ++a)
    for (int b = 0; b <= 9; ++b)
      for (int c = 0; c <= 9; ++c) {
        CHECK(kostant_Z(a, b, c) == brute_kostant(a, b, c));
        CHECK(kostant_Z(a, b, c) == kostant_Z(c, b, a));
      }
  const TruncatedSeries s = kostant_Z_series({3, 3, 3});
  const int zero[] = {0, 0, 0}, ones[] = {1, 1, 1}, e210[] = {2, 1, 0};
  CHECK(s.coeff(zero) == LaurentPoly(s.coeff_vars(), 1));
  CHECK(s.coeff(ones) == LaurentPoly(s.coeff_vars(), 4));
  CHECK(s.coeff(e210) == LaurentPoly(s.coeff_vars(), brute_kostant(2, 1, 0)));
  CHECK(s.coeff(e210) == LaurentPoly(s.coeff_vars(), kostant_Z(2, 1, 0)));
}

TEST_CASE("Kostant multiplicity examples") {
  CHECK(kostant_multiplicity({0, 0, 0}, {0, 0, 0}) == 1);
  CHECK(kostant_multiplicity({1, 0, 1}, {0, 0, 0}) == 3);
  CHECK(kostant_multiplicity({1, 0, 0}, {1, 0, 0}) == 1);
  CHECK(kostant_multiplicity({1, 0, 1}, {0, 0, 0}) ==
        weyl_character(A3, {1, 0, 1}).constant_term());
  CHECK_THROWS_AS(kostant_multiplicity({0, -1, 0}, {0, 0, 0}), NonDominantWeight);
}

TEST_CASE("algebra names") {
  CHECK(parse_algebra("B3") == Algebra::B3);
  CHECK(to_string(Algebra::C3) == "c3");
  CHECK_THROWS_AS(parse_algebra("g2"), UnknownKind);
  CHECK(parse_weight("1,0,2") == Weight{1, 0, 2});
  CHECK_THROWS_AS(parse_weight("1,0"), ParseError);
}
