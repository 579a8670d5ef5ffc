#include <doctest.h>

#include <thread>

#include "chargen/calogero.hpp"
#include "chargen/errors.hpp"
#include "chargen/kostant.hpp"
#include "support.hpp"

using namespace chargen;
using testing::P;

namespace {

const RootSystem& A3 = RootSystem::get(Algebra::A3);

LaurentPoly Z(std::string_view s) { return P(s, z_vars()); }

std::vector<Weight> up_to(int d) {
  std::vector<Weight> out;
  for (int a = 0; a <= d; ++a)
    for (int b = 0; a + b <= d; ++b)
      for (int c = 0; a + b + c <= d; ++c) out.push_back({a, b, c});
  return out;
}

}  // namespace

TEST_CASE("differential operators") {
  const VarSet v{"x", "y"};
  DiffOperator op(v);
  op.add_term(P("x^2", v), std::vector<std::string>{"x", "x"});
  op.add_term(P("3*y", v), std::vector<std::string>{"y"});
  CHECK(op.order() == 2);
  CHECK(op.apply(P("x^3*y^2 + x^-1", v)) == P("12*x^3*y^2 + 2*x^-1", v));
  CHECK(op.apply(LaurentPoly(v, 1)).is_zero());
  CHECK((op - op).terms().empty());
  const DiffOperator wide = op.embed(VarSet{"x", "y", "w"});
  CHECK(wide.apply(P("x^2*w", wide.vars())) == P("2*x^2*w", wide.vars()));
  CHECK_THROWS_AS(op.apply(P("t", VarSet{"t"})), VarSetMismatch);
}

TEST_CASE("Delta_z on small inputs") {
  CHECK(apply_delta_z(Z("1")).is_zero());
  CHECK(apply_delta_z(Z("z1")) == Z("15/2*z1"));
  CHECK(apply_delta_z(Z("z2")) == Z("10*z2"));
  CHECK(apply_delta_z(Z("z1*z3 - 1")) == Z("16*z1*z3 - 16"));
  CHECK_THROWS_AS(apply_delta_z(Z("z1^-1")), NegativeExponentInput);
}

TEST_CASE("eigenvalues") {
  CHECK(eigenvalue({0, 0, 0}) == 0);
  CHECK(eigenvalue({1, 0, 0}) == make_rational(15, 2));
  CHECK(eigenvalue({1, 0, 1}) == 16);
  CHECK(eigenvalue({0, 1, 0}) == 10);
  CHECK_THROWS_AS(eigenvalue({1, -1, 0}), NonDominantWeight);

  const EigenForm f = EigenForm::a3();
  for (const Weight& m : up_to(6)) CHECK(f.evaluate(m) == f.evaluate(reversed(m)));

  const std::size_t map[] = {0, 1, 0};
  const EigenForm real = f.substitute(map, 2);
  CHECK(real.quadratic(0, 0) == 4);
  CHECK(real.quadratic(1, 1) == 2);
  CHECK(real.quadratic(0, 1) == 4);
  CHECK(real.linear(0) == 12);
  CHECK(real.linear(1) == 8);
}

TEST_CASE("solve_character examples") {
  CHECK(solve_character({0, 0, 0}).body == Z("1"));
  CHECK(solve_character({1, 0, 0}).body == Z("z1"));
  CHECK(solve_character({1, 0, 1}).body == Z("z1*z3 - 1"));
  CHECK(solve_character({2, 0, 0}).body == Z("z1^2 - z2"));
  CHECK_THROWS_AS(solve_character({0, 0, -1}), NonDominantWeight);
}

TEST_CASE("characters satisfy the eigenvalue equation and match the Weyl formula") {
  for (const Weight& m : up_to(6)) {
    CAPTURE(format_weight(m));
    const CharPoly chi = solve_character(m);
    CHECK(chi.label == m);
    CHECK(chi.body.coefficient(Monomial(std::span<const int>(m))) == 1);
    CHECK(apply_delta_z(chi.body) == eigenvalue(m) * chi.body);
    CHECK(char_to_x(chi) == weyl_character(A3, m));
    for (const auto& t : chi.body.terms()) CHECK(is_integer(t.coefficient));

    Bindings swap;
    swap.emplace("z1", Z("z3"));
    swap.emplace("z3", Z("z1"));
    CHECK(solve_character(reversed(m)).body == poly_subst(chi.body, swap, z_vars()));
  }
}

TEST_CASE("characters at the dimension point") {
  Bindings dims;
  dims.emplace("z1", LaurentPoly(VarSet{}, 4));
  dims.emplace("z2", LaurentPoly(VarSet{}, 6));
  dims.emplace("z3", LaurentPoly(VarSet{}, 4));
  for (const Weight& m : up_to(8))
    CHECK(poly_subst(solve_character(m).body, dims, VarSet{}).constant_term() ==
          weyl_dim(A3, m));
}

TEST_CASE("no eigenvalue collision below any weight up to degree 10") {
  std::size_t pairs = 0;
  for (const Weight& m : up_to(10)) {
    const Rational em = eigenvalue(m);
    for (int k1 = 0; k1 <= 10; ++k1)
      for (int k2 = 0; k2 <= 10; ++k2)
        for (int k3 = 0; k3 <= 10; ++k3) {
          if (k1 + k2 + k3 == 0) continue;
          const Weight a = m - A3.from_root_coords({k1, k2, k3});
          if (!is_dominant(a)) continue;
          ++pairs;
          CHECK(eigenvalue(a) != em);
        }
    CHECK_NOTHROW(solve_character(m));
  }
  CHECK(pairs > 0);
}

TEST_CASE("z to x conversion") {
  const LaurentPoly z1 = char_to_x({{1, 0, 0}, Z("z1")});
  CHECK(z1 == P("x1 + x2*x1^-1 + x3*x2^-1 + x3^-1", x_vars()));
  CHECK(z_to_x(Z("1")) == LaurentPoly(x_vars(), 1));
  const LaurentPoly adj = z_to_x(Z("z1*z3 - 1"));
  CHECK(adj.constant_term() == 3);
  CHECK(adj.coefficient_sum() == 15);
  CHECK(adj.size() == 13);
}

TEST_CASE("weight multiplicities") {
  const auto fund = weight_multiplicities({1, 0, 0});
  CHECK(fund.size() == 4);
  for (const auto& [w, v] : fund) CHECK(v == 1);
  CHECK(weight_multiplicities({1, 0, 1}).at({0, 0, 0}) == 3);
  const auto m202 = weight_multiplicities({2, 0, 2});
  CHECK(m202.at({1, 0, 1}) == 3);
  CHECK(m202.at({1, 0, 1}) == kostant_multiplicity({2, 0, 2}, {1, 0, 1}));
  Integer total = 0;
  for (const auto& [w, v] : m202) {
    CHECK(v > 0);
    total += v;
  }
  CHECK(total == weyl_dim(A3, {2, 0, 2}));
}

TEST_CASE("character cache under concurrent readers") {
  CharacterCache cache;
  const std::vector<Weight> ms = up_to(4);
  std::vector<std::thread> threads;
  for (int i = 0; i < 4; ++i)
    threads.emplace_back([&] {
      for (const Weight& m : ms) cache.get(m);
    });
  for (auto& t : threads) t.join();
  CHECK(cache.size() == ms.size());
  for (const Weight& m : ms) CHECK(cache.get(m).body == solve_character(m).body);
  CHECK(&cache.get({1, 0, 0}) == &cache.get({1, 0, 0}));
}
