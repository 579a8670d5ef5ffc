#include "chargen/series.hpp"

#include <algorithm>

#include "chargen/errors.hpp"
#include "chargen/poly_text.hpp"

namespace chargen {

RationalFn::RationalFn(LaurentPoly numerator, LaurentPoly denominator)
    : num(std::move(numerator)), den(std::move(denominator)) {
  if (den.is_zero()) throw Error("rational function with zero denominator");
  if (!(num.vars() == den.vars()))
    throw VarSetMismatch("numerator and denominator over different variables");
}

std::string format_exponent(std::span<const int> e) {
  std::string s = "(";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e[i]);
  }
  return s + ")";
}

TruncatedSeries::TruncatedSeries(VarSet vars, std::vector<int> caps, VarSet coeff_vars)
    : vars_(std::move(vars)), caps_(std::move(caps)), coeff_vars_(std::move(coeff_vars)) {
  if (caps_.size() != vars_.size()) throw Error("one cap per expansion variable required");
  for (int c : caps_)
    if (c < 0) throw Error("caps must be non-negative");
  strides_.assign(caps_.size(), 1);
  std::size_t total = 1;
  for (std::size_t i = caps_.size(); i-- > 0;) {
    strides_[i] = total;
    total *= static_cast<std::size_t>(caps_[i]) + 1;
  }
  coeffs_.assign(total, LaurentPoly(coeff_vars_));
}

TruncatedSeries TruncatedSeries::truncate(const LaurentPoly& p, const VarSet& vars,
                                          std::vector<int> caps) {
  const VarSet& full = p.vars();
  VarSet coeff_vars = full.without(vars);
  TruncatedSeries s(vars, std::move(caps), coeff_vars);

  std::vector<std::size_t> exp_idx, coef_idx;
  for (const auto& n : vars.names()) exp_idx.push_back(full.require(n));
  for (const auto& n : coeff_vars.names()) coef_idx.push_back(full.require(n));

  std::vector<std::vector<LaurentPoly::Term>> buckets(s.box_size());
  Exponent e(vars.size());
  for (const auto& t : p.terms()) {
    bool inside = true;
    for (std::size_t k = 0; k < exp_idx.size(); ++k) {
      e[k] = t.monomial[exp_idx[k]];
      if (e[k] < 0)
        throw DenominatorNotUnit("negative power of expansion variable '" + vars.name(k) + "'");
      if (e[k] > s.caps_[k]) inside = false;
    }
    if (!inside) continue;
    Monomial m;
    for (std::size_t k = 0; k < coef_idx.size(); ++k) m.set(k, t.monomial[coef_idx[k]]);
    buckets[s.index(e)].push_back({m, t.coefficient});
  }
  for (std::size_t i = 0; i < buckets.size(); ++i)
    if (!buckets[i].empty()) s.coeffs_[i] = LaurentPoly::from_terms(coeff_vars, std::move(buckets[i]));
  return s;
}

bool TruncatedSeries::within_caps(std::span<const int> e) const {
  if (e.size() != caps_.size()) return false;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] < 0 || e[i] > caps_[i]) return false;
  return true;
}

std::size_t TruncatedSeries::index(std::span<const int> e) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < e.size(); ++i) idx += static_cast<std::size_t>(e[i]) * strides_[i];
  return idx;
}

Exponent TruncatedSeries::exponent(std::size_t index) const {
  Exponent e(caps_.size());
  for (std::size_t i = 0; i < caps_.size(); ++i) {
    e[i] = static_cast<int>(index / strides_[i]);
    index %= strides_[i];
  }
  return e;
}

const LaurentPoly& TruncatedSeries::coeff(std::span<const int> e) const {
  if (!within_caps(e))
    throw ExponentOutOfCaps("exponent " + format_exponent(e) + " outside caps " +
                            format_exponent(caps_));
  return coeffs_[index(e)];
}

void TruncatedSeries::set_coeff(std::span<const int> e, LaurentPoly c) {
  if (!within_caps(e))
    throw ExponentOutOfCaps("exponent " + format_exponent(e) + " outside caps " +
                            format_exponent(caps_));
  if (!(c.vars() == coeff_vars_)) throw VarSetMismatch("coefficient over wrong variables");
  coeffs_[index(e)] = std::move(c);
}

bool TruncatedSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const LaurentPoly& c) { return c.is_zero(); });
}

std::vector<std::pair<Exponent, LaurentPoly>> TruncatedSeries::nonzero_terms() const {
  std::vector<std::pair<Exponent, LaurentPoly>> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) out.emplace_back(exponent(i), coeffs_[i]);
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    int da = 0, db = 0;
    for (int x : a.first) da += x;
    for (int x : b.first) db += x;
    if (da != db) return da < db;
    return a.first < b.first;
  });
  return out;
}

std::optional<Exponent> TruncatedSeries::first_nonzero() const {
  auto terms = nonzero_terms();
  if (terms.empty()) return std::nullopt;
  return terms.front().first;
}

TruncatedSeries TruncatedSeries::map_coefficients(
    const std::function<LaurentPoly(const LaurentPoly&)>& f) const {
  TruncatedSeries out(vars_, caps_, coeff_vars_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    LaurentPoly c = f(coeffs_[i]);
    if (!(c.vars() == coeff_vars_)) throw VarSetMismatch("mapped coefficient over wrong variables");
    out.coeffs_[i] = std::move(c);
  }
  return out;
}

void TruncatedSeries::require_compatible(const TruncatedSeries& o, const char* op) const {
  if (!(vars_ == o.vars_) || !(coeff_vars_ == o.coeff_vars_))
    throw VarSetMismatch(std::string(op) + ": series over different variables");
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  a.require_compatible(b, "series add");
  if (a.caps_ != b.caps_) throw Error("series add: caps differ");
  TruncatedSeries r = a;
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
  return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  a.require_compatible(b, "series subtract");
  if (a.caps_ != b.caps_) throw Error("series subtract: caps differ");
  TruncatedSeries r = a;
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] -= b.coeffs_[i];
  return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  a.require_compatible(b, "series multiply");
  std::vector<int> caps(a.caps_.size());
  for (std::size_t i = 0; i < caps.size(); ++i) caps[i] = std::min(a.caps_[i], b.caps_[i]);
  TruncatedSeries r(a.vars_, caps, a.coeff_vars_);
  std::vector<PolyAccumulator> acc(r.box_size(), PolyAccumulator(a.coeff_vars_));
  Exponent e(caps.size());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    const Exponent ea = a.exponent(i);
    if (!r.within_caps(ea)) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      const Exponent eb = b.exponent(j);
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      if (!r.within_caps(e)) continue;
      acc[r.index(e)].add_product(a.coeffs_[i], b.coeffs_[j]);
    }
  }
  for (std::size_t i = 0; i < acc.size(); ++i) r.coeffs_[i] = acc[i].take();
  return r;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a.vars_ == b.vars_ && a.coeff_vars_ == b.coeff_vars_ && a.caps_ == b.caps_ &&
         a.coeffs_ == b.coeffs_;
}

TruncatedSeries series_expand(const RationalFn& r, const std::vector<std::string>& expansion_vars,
                              std::vector<int> caps) {
  const VarSet vars(expansion_vars);
  for (const auto& n : expansion_vars) r.num.vars().require(n);
  if (caps.size() != vars.size()) throw Error("one cap per expansion variable required");

  const TruncatedSeries num = TruncatedSeries::truncate(r.num, vars, caps);
  const TruncatedSeries den = TruncatedSeries::truncate(r.den, vars, caps);
  const VarSet& cv = num.coeff_vars();

  const Exponent zero(vars.size(), 0);
  const LaurentPoly& den0 = den.coeff(zero);
  if (den0.is_zero() || !den0.is_constant())
    throw DenominatorNotUnit("denominator constant term is not a nonzero number: " +
                             format_poly(den0));
  const Rational inv0 = 1 / den0.constant_term();

  // Nonzero denominator terms other than the constant one.
  std::vector<std::pair<Exponent, const LaurentPoly*>> den_terms;
  for (std::size_t i = 1; i < den.box_size(); ++i) {
    const Exponent f = den.exponent(i);
    const LaurentPoly& c = den.coeff(f);
    if (!c.is_zero()) den_terms.emplace_back(f, &c);
  }

  // S * den = num, solved coefficient by coefficient; row-major order visits
  // every e - f (f > 0) before e.
  TruncatedSeries s(vars, caps, cv);
  Exponent diff(vars.size());
  for (std::size_t i = 0; i < s.box_size(); ++i) {
    const Exponent e = s.exponent(i);
    PolyAccumulator acc(cv);
    acc.add(num.coeff(e));
    for (const auto& [f, c] : den_terms) {
      bool fits = true;
      for (std::size_t k = 0; k < e.size(); ++k) {
        diff[k] = e[k] - f[k];
        if (diff[k] < 0) {
          fits = false;
          break;
        }
      }
      if (!fits) continue;
      const LaurentPoly& prev = s.coeff(diff);
      if (!prev.is_zero()) acc.add_product(*c, prev, -1);
    }
    LaurentPoly value = acc.take();
    if (inv0 != 1) value *= inv0;
    s.set_coeff(e, std::move(value));
  }
  return s;
}

}  // namespace chargen
