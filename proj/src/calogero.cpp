#include "chargen/calogero.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <unordered_map>

#include "chargen/errors.hpp"
#include "chargen/poly_text.hpp"

namespace chargen {

EigenForm::EigenForm(std::size_t n)
    : quad_(n, std::vector<Rational>(n, Rational(0))), linear_(n, Rational(0)) {}

EigenForm EigenForm::a3() {
  EigenForm f(3);
  f.set_quadratic(0, 0, make_rational(3, 2));
  f.set_quadratic(1, 1, 2);
  f.set_quadratic(2, 2, make_rational(3, 2));
  f.set_quadratic(0, 1, 2);
  f.set_quadratic(0, 2, 1);
  f.set_quadratic(1, 2, 2);
  f.set_linear(0, 6);
  f.set_linear(1, 8);
  f.set_linear(2, 6);
  return f;
}

const Rational& EigenForm::quadratic(std::size_t i, std::size_t j) const {
  return i <= j ? quad_.at(i).at(j) : quad_.at(j).at(i);
}

void EigenForm::set_quadratic(std::size_t i, std::size_t j, Rational v) {
  if (i > j) std::swap(i, j);
  quad_.at(i).at(j) = std::move(v);
}

Rational EigenForm::evaluate(std::span<const int> m) const {
  if (m.size() != size()) throw Error("eigenform arity mismatch");
  Rational total = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    total += linear_[i] * m[i];
    for (std::size_t j = i; j < size(); ++j) total += quad_[i][j] * m[i] * m[j];
  }
  return total;
}

EigenForm EigenForm::substitute(std::span<const std::size_t> map, std::size_t new_size) const {
  if (map.size() != size()) throw Error("substitution map must cover every variable");
  EigenForm out(new_size);
  for (std::size_t i = 0; i < size(); ++i) {
    if (map[i] >= new_size) throw Error("substitution target out of range");
    out.linear_[map[i]] += linear_[i];
    for (std::size_t j = i; j < size(); ++j) {
      const auto [a, b] = std::minmax(map[i], map[j]);
      out.quad_[a][b] += quad_[i][j];
    }
  }
  return out;
}

const DiffOperator& delta_z() {
  static const DiffOperator op = [] {
    const VarSet& z = z_vars();
    DiffOperator d(z);
    const Rational half = make_rational(1, 2);
    auto add = [&](const char* c, std::vector<std::string> wrt) {
      d.add_term(half * parse_poly(c, z), wrt);
    };
    add("3*z1^2 - 8*z2", {"z1", "z1"});
    add("4*z2^2 - 8*z1*z3 - 16", {"z2", "z2"});
    add("3*z3^2 - 8*z2", {"z3", "z3"});
    add("4*z1*z2 - 24*z3", {"z1", "z2"});
    add("2*z1*z3 - 32", {"z1", "z3"});
    add("4*z2*z3 - 24*z1", {"z2", "z3"});
    add("15*z1", {"z1"});
    add("20*z2", {"z2"});
    add("15*z3", {"z3"});
    return d;
  }();
  return op;
}

LaurentPoly apply_delta_z(const LaurentPoly& p) {
  if (p.has_negative_exponents())
    throw NegativeExponentInput("Delta_z needs a polynomial in z, got " + format_poly(p));
  return delta_z().apply(p);
}

Rational eigenvalue(const Weight& m) {
  if (!is_dominant(m)) throw NonDominantWeight("weight " + format_weight(m) + " is not dominant");
  static const EigenForm form = EigenForm::a3();
  return form.evaluate(m);
}

namespace {

Monomial to_monomial(const Weight& w) { return Monomial(std::span<const int>(w)); }

// Delta_z(z^a), shared across solves.
const LaurentPoly& delta_image(const Weight& a) {
  static std::mutex mu;
  static std::map<Weight, LaurentPoly> images;
  {
    std::lock_guard lock(mu);
    if (auto it = images.find(a); it != images.end()) return it->second;
  }
  LaurentPoly image = delta_z().apply(LaurentPoly::monomial(z_vars(), to_monomial(a)));
  std::lock_guard lock(mu);
  return images.try_emplace(a, std::move(image)).first->second;
}

// Dominant a with m - a a non-negative integer combination of simple roots,
// ordered by the height of m - a (m itself first).
std::vector<Weight> dominant_below(const Weight& m) {
  const RootSystem& sys = RootSystem::get(Algebra::A3);
  const RootCoords top = sys.to_root_coords(m);
  std::array<int, 3> bound{};
  for (int i = 0; i < 3; ++i) {
    const Rational& k = top.k[i];
    bound[i] = static_cast<int>(mpz_class(k.get_num() / k.get_den()).get_si());
  }
  std::vector<std::pair<int, Weight>> found;
  for (int k1 = 0; k1 <= bound[0]; ++k1)
    for (int k2 = 0; k2 <= bound[1]; ++k2)
      for (int k3 = 0; k3 <= bound[2]; ++k3) {
        const Weight a = m - sys.from_root_coords({k1, k2, k3});
        if (is_dominant(a)) found.push_back({k1 + k2 + k3, a});
      }
  std::sort(found.begin(), found.end());
  std::vector<Weight> out;
  out.reserve(found.size());
  for (auto& [h, a] : found) out.push_back(a);
  return out;
}

}  // namespace

CharPoly solve_character(const Weight& m) {
  const Rational eps_m = eigenvalue(m);
  const VarSet& z = z_vars();

  // Off-diagonal part of Delta_z applied to the solved prefix.
  std::unordered_map<Monomial, Rational, Monomial::Hash> pending;
  std::vector<LaurentPoly::Term> terms;

  for (const Weight& a : dominant_below(m)) {
    const Monomial za = to_monomial(a);
    Rational c = 1;
    if (a != m) {
      auto it = pending.find(za);
      if (it == pending.end() || it->second == 0) continue;
      const Rational eps_a = eigenvalue(a);
      if (eps_a == eps_m)
        throw EigenvalueCollision("eigenvalue of " + format_weight(a) + " equals that of " +
                                  format_weight(m));
      c = it->second / (eps_m - eps_a);
    }
    const LaurentPoly& image = delta_image(a);
    for (const auto& t : image.terms()) {
      if (t.monomial == za) {
        if (t.coefficient != eigenvalue(a))
          throw ConsistencyError("Delta_z is not triangular at " + format_weight(a));
        continue;
      }
      pending[t.monomial] += c * t.coefficient;
    }
    terms.push_back({za, std::move(c)});
  }

  CharPoly out{m, LaurentPoly::from_terms(z, std::move(terms))};
  for (const auto& t : out.body.terms())
    if (!is_integer(t.coefficient))
      throw NonIntegral("character " + format_weight(m) + " has coefficient " +
                        to_string(t.coefficient));
  const LaurentPoly residual = apply_delta_z(out.body) - eps_m * out.body;
  if (!residual.is_zero())
    throw ConsistencyError("character " + format_weight(m) + " fails the eigenvalue equation");
  return out;
}

LaurentPoly z_to_x(const LaurentPoly& p, const GoldenSet& golden) {
  Bindings b;
  b.emplace("z1", golden.poly("a3_chi_100", x_vars()));
  b.emplace("z2", golden.poly("a3_chi_010", x_vars()));
  b.emplace("z3", golden.poly("a3_chi_001", x_vars()));
  return poly_subst(p, b, x_vars());
}

LaurentPoly char_to_x(const CharPoly& c, const GoldenSet& golden) {
  return z_to_x(c.body, golden);
}

std::map<Weight, Integer> weight_multiplicities(const Weight& m) {
  const LaurentPoly x = char_to_x(solve_character(m));
  std::map<Weight, Integer> out;
  for (const auto& t : x.terms()) {
    const auto e = t.monomial.exponents(3);
    out.emplace(Weight{e[0], e[1], e[2]}, to_integer(t.coefficient, "weight multiplicity"));
  }
  return out;
}

const CharPoly& CharacterCache::get(const Weight& m) {
  {
    std::shared_lock lock(mu_);
    if (auto it = table_.find(m); it != table_.end()) return *it->second;
  }
  auto solved = std::make_unique<const CharPoly>(solve_character(m));
  std::unique_lock lock(mu_);
  return *table_.try_emplace(m, std::move(solved)).first->second;
}

std::size_t CharacterCache::size() const {
  std::shared_lock lock(mu_);
  return table_.size();
}

}  // namespace chargen
