#include "chargen/roots.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <set>

#include "chargen/errors.hpp"
#include "chargen/golden.hpp"

namespace chargen {

std::string_view to_string(Algebra a) {
  switch (a) {
    case Algebra::A3: return "a3";
    case Algebra::B3: return "b3";
    case Algebra::C3: return "c3";
  }
  return "?";
}

Algebra parse_algebra(std::string_view s) {
  std::string lower(s);
  for (auto& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "a3") return Algebra::A3;
  if (lower == "b3") return Algebra::B3;
  if (lower == "c3") return Algebra::C3;
  throw UnknownKind("unknown algebra '" + std::string(s) + "' (expected a3, b3 or c3)");
}

std::string format_weight(const Weight& w) {
  return std::to_string(w[0]) + "," + std::to_string(w[1]) + "," + std::to_string(w[2]);
}

Weight parse_weight(std::string_view s) {
  Weight w{};
  std::size_t pos = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    while (pos < s.size() && s[pos] == ' ') ++pos;
    const char* first = s.data() + pos;
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, w[i]);
    if (ec != std::errc{} || ptr == first)
      throw ParseError("expected three comma-separated integers, got '" + std::string(s) + "'");
    pos = static_cast<std::size_t>(ptr - s.data());
    while (pos < s.size() && s[pos] == ' ') ++pos;
    if (i < 2) {
      if (pos >= s.size() || s[pos] != ',')
        throw ParseError("expected three comma-separated integers, got '" + std::string(s) + "'");
      ++pos;
    }
  }
  if (pos != s.size())
    throw ParseError("trailing characters in weight '" + std::string(s) + "'");
  return w;
}

bool is_dominant(const Weight& w) { return w[0] >= 0 && w[1] >= 0 && w[2] >= 0; }

Weight operator+(const Weight& a, const Weight& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}
Weight operator-(const Weight& a, const Weight& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}
Weight reversed(const Weight& w) { return {w[2], w[1], w[0]}; }

bool RootCoords::integral() const {
  return std::all_of(k.begin(), k.end(), [](const Rational& q) { return is_integer(q); });
}
bool RootCoords::non_negative() const {
  return std::all_of(k.begin(), k.end(), [](const Rational& q) { return q >= 0; });
}

Weight WeylElement::apply(const Weight& w) const {
  Weight r{};
  for (std::size_t i = 0; i < 3; ++i)
    r[i] = matrix[i][0] * w[0] + matrix[i][1] * w[1] + matrix[i][2] * w[2];
  return r;
}

namespace {

IntMatrix3 multiply(const IntMatrix3& a, const IntMatrix3& b) {
  IntMatrix3 r{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) r[i][j] += a[i][k] * b[k][j];
  return r;
}

constexpr IntMatrix3 kIdentity{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};

}  // namespace

RootSystem::RootSystem(Algebra a) : label_(a) {
  switch (a) {
    case Algebra::A3:
      cartan_ = {{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}};
      length_sq_ = {2, 2, 2};
      break;
    case Algebra::B3:  // alpha_3 short
      cartan_ = {{{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}}};
      length_sq_ = {2, 2, 1};
      break;
    case Algebra::C3:  // alpha_3 long
      cartan_ = {{{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}}};
      length_sq_ = {2, 2, 4};
      break;
  }

  // w = sum_i k_i alpha_i = k^T C, so k = C^{-T} w.
  const auto& c = cartan_;
  const Rational det = Rational(c[0][0]) * (c[1][1] * c[2][2] - c[1][2] * c[2][1]) -
                       Rational(c[0][1]) * (c[1][0] * c[2][2] - c[1][2] * c[2][0]) +
                       Rational(c[0][2]) * (c[1][0] * c[2][1] - c[1][1] * c[2][0]);
  std::array<std::array<Rational, 3>, 3> inv{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      const std::size_t r0 = (j + 1) % 3, r1 = (j + 2) % 3;
      const std::size_t c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      inv[i][j] = Rational(c[r0][c0] * c[r1][c1] - c[r0][c1] * c[r1][c0]) / det;
    }
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) inv_cartan_t_[i][j] = inv[j][i];

  weyl_ = enumerate_weyl(*this);

  std::set<Weight> roots;
  for (const auto& w : weyl_)
    for (std::size_t i = 0; i < 3; ++i) {
      const RootCoords k = to_root_coords(w.apply(simple_root(i)));
      if (!k.integral()) throw ConsistencyError("root with non-integral root coordinates");
      Weight kk{static_cast<int>(k.k[0].get_num().get_si()),
                static_cast<int>(k.k[1].get_num().get_si()),
                static_cast<int>(k.k[2].get_num().get_si())};
      if (kk[0] >= 0 && kk[1] >= 0 && kk[2] >= 0) roots.insert(kk);
    }
  positive_roots_.assign(roots.begin(), roots.end());
  std::stable_sort(positive_roots_.begin(), positive_roots_.end(),
                   [](const Weight& x, const Weight& y) {
                     return x[0] + x[1] + x[2] < y[0] + y[1] + y[2];
                   });
}

const RootSystem& RootSystem::get(Algebra a) {
  static const RootSystem a3(Algebra::A3);
  static const RootSystem b3(Algebra::B3);
  static const RootSystem c3(Algebra::C3);
  switch (a) {
    case Algebra::A3: return a3;
    case Algebra::B3: return b3;
    case Algebra::C3: return c3;
  }
  return a3;
}

RootCoords RootSystem::to_root_coords(const Weight& w) const {
  RootCoords r;
  for (std::size_t i = 0; i < 3; ++i)
    r.k[i] = inv_cartan_t_[i][0] * w[0] + inv_cartan_t_[i][1] * w[1] + inv_cartan_t_[i][2] * w[2];
  return r;
}

Weight RootSystem::from_root_coords(const Weight& k) const {
  Weight w{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) w[j] += k[i] * cartan_[i][j];
  return w;
}

Rational RootSystem::inner(const Weight& a, const Weight& b) const {
  // (lambda_i, alpha_j) = delta_ij |alpha_j|^2 / 2.
  const RootCoords kb = to_root_coords(b);
  Rational s = 0;
  for (std::size_t j = 0; j < 3; ++j) s += kb.k[j] * a[j] * make_rational(length_sq_[j], 2);
  return s;
}

std::vector<WeylElement> enumerate_weyl(const RootSystem& sys) {
  // s_i(l) = l - l_i alpha_i, i.e. (s_i l)_j = l_j - cartan[i][j] l_i.
  std::array<IntMatrix3, 3> gens{};
  for (std::size_t i = 0; i < 3; ++i) {
    gens[i] = kIdentity;
    for (std::size_t j = 0; j < 3; ++j) gens[i][j][i] -= sys.cartan()[i][j];
  }
  std::vector<WeylElement> out{{kIdentity, 1}};
  std::set<IntMatrix3> seen{kIdentity};
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const WeylElement cur = out[queue.front()];
    queue.pop_front();
    for (const auto& g : gens) {
      IntMatrix3 next = multiply(g, cur.matrix);
      if (seen.insert(next).second) {
        out.push_back({next, -cur.sign});
        queue.push_back(out.size() - 1);
      }
    }
  }
  return out;
}

RootCoords to_root_coords(const RootSystem& sys, const Weight& w) { return sys.to_root_coords(w); }

LaurentPoly weyl_character(const RootSystem& sys, const Weight& highest) {
  if (!is_dominant(highest))
    throw NonDominantWeight("weight " + format_weight(highest) + " is not dominant");
  const VarSet& xv = x_vars();
  const Weight shifted = highest + RootSystem::rho();
  PolyAccumulator num(xv), den(xv);
  for (const auto& w : sys.weyl_group()) {
    const Weight a = w.apply(shifted);
    const Weight b = w.apply(RootSystem::rho());
    num.add(Monomial{a[0], a[1], a[2]}, w.sign);
    den.add(Monomial{b[0], b[1], b[2]}, w.sign);
  }
  LaurentPoly chi = poly_exact_div(num.take(), den.take());
  for (const auto& t : chi.terms())
    if (!is_integer(t.coefficient) || t.coefficient <= 0)
      throw ConsistencyError("character coefficient is not a positive integer");
  return chi;
}

Integer weyl_dim(const RootSystem& sys, const Weight& highest) {
  if (!is_dominant(highest))
    throw NonDominantWeight("weight " + format_weight(highest) + " is not dominant");
  const Weight shifted = highest + RootSystem::rho();
  Rational d = 1;
  for (const auto& root : sys.positive_roots()) {
    const Weight alpha = sys.from_root_coords(root);
    d *= sys.inner(shifted, alpha) / sys.inner(RootSystem::rho(), alpha);
  }
  return to_integer(d, "Weyl dimension");
}

Integer a3_dim_formula(const Weight& m) {
  const Integer p = Integer(m[0] + 1) * (m[1] + 1) * (m[2] + 1) * (m[0] + m[1] + 2) *
                    (m[1] + m[2] + 2) * (m[0] + m[1] + m[2] + 3);
  return to_integer(make_rational(p, 12), "A3 dimension");
}

Integer a3_real_dim_formula(int m1, int m2) {
  const Integer p = Integer(m1 + 1) * (m1 + 1) * (m2 + 1) * (m1 + m2 + 2) * (m1 + m2 + 2) *
                    (2 * m1 + m2 + 3);
  return to_integer(make_rational(p, 12), "A3 real dimension");
}

}  // namespace chargen
