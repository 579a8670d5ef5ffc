#include "chargen/diff_operator.hpp"

#include "chargen/errors.hpp"
#include "chargen/poly_text.hpp"

namespace chargen {

DiffOperator::DiffOperator(VarSet vars) : vars_(std::move(vars)) {}

void DiffOperator::add_term(const LaurentPoly& coefficient, Orders orders) {
  if (orders.size() != vars_.size()) throw Error("derivative orders must match variable count");
  for (int o : orders)
    if (o < 0) throw Error("negative derivative order");
  if (!(coefficient.vars() == vars_))
    throw VarSetMismatch("operator coefficient over " + coefficient.vars().to_string() +
                         ", expected " + vars_.to_string());
  auto [it, inserted] = terms_.try_emplace(std::move(orders), coefficient);
  if (!inserted) it->second += coefficient;
  if (it->second.is_zero()) terms_.erase(it);
}

void DiffOperator::add_term(const LaurentPoly& coefficient, const std::vector<std::string>& wrt) {
  Orders orders(vars_.size(), 0);
  for (const auto& v : wrt) ++orders[vars_.require(v)];
  add_term(coefficient, std::move(orders));
}

int DiffOperator::order() const {
  int best = 0;
  for (const auto& [orders, c] : terms_) {
    int s = 0;
    for (int o : orders) s += o;
    best = std::max(best, s);
  }
  return best;
}

LaurentPoly DiffOperator::apply(const LaurentPoly& p) const {
  if (!(p.vars() == vars_))
    throw VarSetMismatch("operator over " + vars_.to_string() + " applied to polynomial over " +
                         p.vars().to_string());
  PolyAccumulator acc(vars_);
  for (const auto& [orders, coefficient] : terms_) {
    std::vector<LaurentPoly::Term> derived;
    derived.reserve(p.size());
    for (const auto& t : p.terms()) {
      Rational c = t.coefficient;
      Monomial m = t.monomial;
      for (std::size_t i = 0; i < orders.size() && c != 0; ++i) {
        for (int k = 0; k < orders[i]; ++k) c *= m[i] - k;
        m.set(i, m[i] - orders[i]);
      }
      if (c != 0) derived.push_back({m, std::move(c)});
    }
    acc.add_product(coefficient, LaurentPoly::from_terms(vars_, std::move(derived)));
  }
  return acc.take();
}

TruncatedSeries DiffOperator::apply(const TruncatedSeries& s) const {
  if (!(s.vars() == vars_))
    throw VarSetMismatch("operator over " + vars_.to_string() +
                         " applied to series in " + s.vars().to_string());
  TruncatedSeries out(s.vars(), s.caps(), s.coeff_vars());
  std::vector<PolyAccumulator> acc(s.box_size(), PolyAccumulator(s.coeff_vars()));
  for (std::size_t i = 0; i < s.box_size(); ++i) {
    const Exponent e = s.exponent(i);
    const LaurentPoly& c = s.coeff(e);
    if (c.is_zero()) continue;
    const LaurentPoly image = apply(LaurentPoly::monomial(vars_, Monomial(e)));
    for (const auto& t : image.terms()) {
      const Exponent f = t.monomial.exponents(vars_.size());
      if (!s.within_caps(f)) continue;
      acc[s.index(f)].add_scaled(c, t.coefficient);
    }
  }
  for (std::size_t i = 0; i < acc.size(); ++i) out.set_coeff(out.exponent(i), acc[i].take());
  return out;
}

DiffOperator DiffOperator::embed(const VarSet& target) const {
  DiffOperator out(target);
  for (const auto& [orders, c] : terms_) {
    Orders mapped(target.size(), 0);
    for (std::size_t i = 0; i < orders.size(); ++i)
      if (orders[i]) mapped[target.require(vars_.name(i))] = orders[i];
    out.add_term(c.embed(target), std::move(mapped));
  }
  return out;
}

DiffOperator DiffOperator::operator-(const DiffOperator& o) const {
  if (!(o.vars_ == vars_)) throw VarSetMismatch("operator difference over different variables");
  DiffOperator out = *this;
  for (const auto& [orders, c] : o.terms_) out.add_term(-c, orders);
  return out;
}

bool operator==(const DiffOperator& a, const DiffOperator& b) {
  return a.vars_ == b.vars_ && a.terms_ == b.terms_;
}

std::string DiffOperator::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += "(" + format_poly(it->second) + ")";
    std::string d;
    for (std::size_t i = 0; i < it->first.size(); ++i) {
      const int o = it->first[i];
      if (!o) continue;
      if (!d.empty()) d += "*";
      d += vars_.name(i);
      if (o > 1) d += "^" + std::to_string(o);
    }
    if (!d.empty()) out += "*D[" + d + "]";
  }
  return out;
}

}  // namespace chargen
