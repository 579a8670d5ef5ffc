#include "chargen/laurent_poly.hpp"

#include <algorithm>
#include <limits>

#include "chargen/errors.hpp"
#include "chargen/poly_text.hpp"

namespace chargen {

Monomial::Monomial(std::span<const int> exponents) {
  if (exponents.size() > kMaxVars)
    throw Error("monomial has more than " + std::to_string(kMaxVars) + " exponents");
  for (std::size_t i = 0; i < exponents.size(); ++i) set(i, exponents[i]);
}

namespace {

void require_same_vars(const LaurentPoly& a, const LaurentPoly& b, const char* op) {
  if (!(a.vars() == b.vars()))
    throw VarSetMismatch(std::string(op) + ": variable sets differ " + a.vars().to_string() +
                         " vs " + b.vars().to_string());
}

bool integral(const Rational& q) { return mpz_cmp_ui(mpq_denref(q.get_mpq_t()), 1) == 0; }

// acc += a * b, with an integer fast path that never touches denominators.
void add_mul(Rational& acc, const Rational& a, const Rational& b) {
  if (integral(acc) && integral(a) && integral(b)) {
    mpz_addmul(mpq_numref(acc.get_mpq_t()), mpq_numref(a.get_mpq_t()),
               mpq_numref(b.get_mpq_t()));
    return;
  }
  acc += a * b;
}

void sub_mul(Rational& acc, const Rational& a, const Rational& b) {
  if (integral(acc) && integral(a) && integral(b)) {
    mpz_submul(mpq_numref(acc.get_mpq_t()), mpq_numref(a.get_mpq_t()),
               mpq_numref(b.get_mpq_t()));
    return;
  }
  acc -= a * b;
}

// Merge two sorted term lists with sign +1/-1 on the second.
std::vector<LaurentPoly::Term> merge(const std::vector<LaurentPoly::Term>& a,
                                     const std::vector<LaurentPoly::Term>& b, bool subtract) {
  std::vector<LaurentPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && grlex_less(a[i].monomial, b[j].monomial))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || grlex_less(b[j].monomial, a[i].monomial)) {
      out.push_back({b[j].monomial, subtract ? Rational(-b[j].coefficient) : b[j].coefficient});
      ++j;
    } else {
      Rational c = subtract ? Rational(a[i].coefficient - b[j].coefficient)
                            : Rational(a[i].coefficient + b[j].coefficient);
      if (c != 0) out.push_back({a[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(VarSet vars) : vars_(std::move(vars)) {}

LaurentPoly::LaurentPoly(VarSet vars, const Rational& constant) : vars_(std::move(vars)) {
  if (constant != 0) terms_.push_back({Monomial{}, constant});
}

LaurentPoly LaurentPoly::variable(const VarSet& vars, std::string_view name) {
  Monomial m;
  m.set(vars.require(name), 1);
  return monomial(vars, m);
}

LaurentPoly LaurentPoly::monomial(const VarSet& vars, const Monomial& m, const Rational& c) {
  LaurentPoly p(vars);
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

LaurentPoly LaurentPoly::from_terms(VarSet vars, std::vector<Term> terms) {
  for (const auto& t : terms)
    for (std::size_t i = vars.size(); i < kMaxVars; ++i)
      if (t.monomial[i] != 0) throw Error("monomial exponent outside variable set");
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return grlex_less(a.monomial, b.monomial); });
  LaurentPoly p(std::move(vars));
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coefficient += t.coefficient;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coefficient == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coefficient == 0) p.terms_.pop_back();
  return p;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

Rational LaurentPoly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), m,
      [](const Term& t, const Monomial& key) { return grlex_less(t.monomial, key); });
  if (it != terms_.end() && it->monomial == m) return it->coefficient;
  return 0;
}

const LaurentPoly::Term& LaurentPoly::leading_term() const {
  if (terms_.empty()) throw Error("leading term of the zero polynomial");
  return terms_.back();
}

Monomial LaurentPoly::min_exponents() const {
  if (terms_.empty()) return {};
  Monomial m = terms_.front().monomial;
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < vars_.size(); ++i) m.set(i, std::min(m[i], t.monomial[i]));
  return m;
}

bool LaurentPoly::has_negative_exponents() const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return !t.monomial.non_negative(); });
}

int LaurentPoly::max_degree(std::size_t i) const {
  if (terms_.empty()) return 0;
  int d = std::numeric_limits<int>::min();
  for (const auto& t : terms_) d = std::max(d, t.monomial[i]);
  return d;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.coefficient = -t.coefficient;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  require_same_vars(*this, o, "add");
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  require_same_vars(*this, o, "subtract");
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = poly_mul(*this, o); }

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else if (c != 1) {
    for (auto& t : terms_) t.coefficient *= c;
  }
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) { return poly_mul(a, b); }

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  return a.vars_ == b.vars_ && a.terms_ == b.terms_;
}

LaurentPoly LaurentPoly::shifted(const Monomial& m, const Rational& c) const {
  LaurentPoly r(vars_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves grlex order.
  for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, t.coefficient * c});
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly result(vars_, 1);
  LaurentPoly base = *this;
  while (k) {
    if (k & 1u) result = poly_mul(result, base);
    k >>= 1u;
    if (k) base = poly_mul(base, base);
  }
  return result;
}

LaurentPoly LaurentPoly::embed(const VarSet& target) const {
  if (target == vars_) return *this;
  std::vector<std::optional<std::size_t>> map(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) map[i] = target.index_of(vars_.name(i));
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (t.monomial[i] == 0) continue;
      if (!map[i])
        throw UnknownVariable("variable '" + vars_.name(i) + "' does not exist in " +
                              target.to_string());
      m.set(*map[i], t.monomial[i]);
    }
    out.push_back({m, t.coefficient});
  }
  return from_terms(target, std::move(out));
}

Rational LaurentPoly::coefficient_sum() const {
  Rational s = 0;
  for (const auto& t : terms_) s += t.coefficient;
  return s;
}

std::string LaurentPoly::to_string() const { return format_poly(*this); }

// ---------------------------------------------------------------------------
// PolyAccumulator

void PolyAccumulator::add(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = acc_.try_emplace(m, c);
  if (!inserted) it->second += c;
}

void PolyAccumulator::add(const LaurentPoly& p) {
  for (const auto& t : p.terms()) add(t.monomial, t.coefficient);
}

void PolyAccumulator::add_scaled(const LaurentPoly& p, const Rational& c, const Monomial& shift) {
  if (c == 0) return;
  for (const auto& t : p.terms()) {
    auto [it, inserted] = acc_.try_emplace(t.monomial * shift);
    add_mul(it->second, t.coefficient, c);
  }
}

void PolyAccumulator::add_product(const LaurentPoly& a, const LaurentPoly& b,
                                  const Rational& scale) {
  if (scale == 0) return;
  const bool plus = scale == 1;
  const bool minus = scale == -1;
  for (const auto& ta : a.terms()) {
    Rational ca = (plus || minus) ? ta.coefficient : Rational(ta.coefficient * scale);
    for (const auto& tb : b.terms()) {
      auto [it, inserted] = acc_.try_emplace(ta.monomial * tb.monomial);
      if (minus)
        sub_mul(it->second, ca, tb.coefficient);
      else
        add_mul(it->second, ca, tb.coefficient);
    }
  }
}

LaurentPoly PolyAccumulator::take() {
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(acc_.size());
  for (auto& [m, c] : acc_)
    if (c != 0) terms.push_back({m, std::move(c)});
  acc_.clear();
  return LaurentPoly::from_terms(vars_, std::move(terms));
}

// ---------------------------------------------------------------------------
// Free operations

LaurentPoly poly_mul(const LaurentPoly& p, const LaurentPoly& q) {
  require_same_vars(p, q, "poly_mul");
  if (p.is_zero() || q.is_zero()) return LaurentPoly(p.vars());
  if (p.size() == 1) return q.shifted(p.terms()[0].monomial, p.terms()[0].coefficient);
  if (q.size() == 1) return p.shifted(q.terms()[0].monomial, q.terms()[0].coefficient);
  PolyAccumulator acc(p.vars());
  acc.add_product(p, q);
  return acc.take();
}

LaurentPoly poly_exact_div(const LaurentPoly& p, const LaurentPoly& d) {
  require_same_vars(p, d, "poly_exact_div");
  if (d.is_zero()) throw InexactDivision("division by the zero polynomial");
  if (p.is_zero()) return LaurentPoly(p.vars());

  // Clear negative exponents so that leading-term elimination runs over
  // ordinary polynomials, where it is guaranteed to terminate.
  const Monomial shift_p = p.min_exponents();
  const Monomial shift_d = d.min_exponents();
  const LaurentPoly dn = d.shifted(shift_d.pow(-1));

  std::map<Monomial, Rational, GrlexLess> rem;
  for (const auto& t : p.terms()) rem.emplace(t.monomial / shift_p, t.coefficient);

  const auto& lead = dn.leading_term();
  std::vector<LaurentPoly::Term> quotient;
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    if (!lead.monomial.divides(top->first))
      throw InexactDivision("remainder term not divisible by leading term of " +
                            format_poly(d));
    const Monomial qm = top->first / lead.monomial;
    const Rational qc = top->second / lead.coefficient;
    for (const auto& t : dn.terms()) {
      auto [it, inserted] = rem.try_emplace(qm * t.monomial);
      sub_mul(it->second, qc, t.coefficient);
      if (it->second == 0) rem.erase(it);
    }
    quotient.push_back({qm, qc});
  }
  return LaurentPoly::from_terms(p.vars(), std::move(quotient)).shifted(shift_p / shift_d);
}

LaurentPoly poly_subst(const LaurentPoly& p, const Bindings& bindings, const VarSet& target) {
  const VarSet& src = p.vars();
  struct Slot {
    const LaurentPoly* binding = nullptr;
    std::optional<std::size_t> passthrough;
    std::map<int, LaurentPoly> powers;
  };
  std::vector<Slot> slots(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    auto it = bindings.find(src.name(i));
    if (it != bindings.end()) {
      if (!(it->second.vars() == target))
        throw VarSetMismatch("binding for '" + src.name(i) + "' is not over " +
                             target.to_string());
      slots[i].binding = &it->second;
    } else {
      slots[i].passthrough = target.index_of(src.name(i));
    }
  }

  auto power = [&](std::size_t i, int e) -> const LaurentPoly& {
    auto& slot = slots[i];
    auto found = slot.powers.find(e);
    if (found != slot.powers.end()) return found->second;
    const LaurentPoly& b = *slot.binding;
    LaurentPoly base = b;
    if (e < 0) {
      if (b.size() != 1)
        throw NonInvertibleBinding("negative power of '" + src.name(i) +
                                   "' with non-monomial binding " + format_poly(b));
      const auto& t = b.terms()[0];
      base = LaurentPoly::monomial(target, t.monomial.pow(-1), 1 / t.coefficient);
    }
    const unsigned k = static_cast<unsigned>(e < 0 ? -e : e);
    // Build from the nearest cached smaller power of the same sign.
    LaurentPoly value(target, 1);
    unsigned have = 0;
    for (auto& [pe, pv] : slot.powers) {
      if ((pe < 0) == (e < 0) && static_cast<unsigned>(pe < 0 ? -pe : pe) < k &&
          static_cast<unsigned>(pe < 0 ? -pe : pe) > have) {
        have = static_cast<unsigned>(pe < 0 ? -pe : pe);
        value = pv;
      }
    }
    for (; have < k; ++have) value = poly_mul(value, base);
    return slot.powers.emplace(e, std::move(value)).first->second;
  };

  PolyAccumulator acc(target);
  for (const auto& t : p.terms()) {
    LaurentPoly term(target, t.coefficient);
    Monomial pass;
    for (std::size_t i = 0; i < src.size(); ++i) {
      const int e = t.monomial[i];
      if (e == 0) continue;
      if (slots[i].binding) {
        term = poly_mul(term, power(i, e));
      } else {
        if (!slots[i].passthrough)
          throw UnknownVariable("unbound variable '" + src.name(i) + "' missing from " +
                                target.to_string());
        pass.set(*slots[i].passthrough, pass[*slots[i].passthrough] + e);
      }
    }
    acc.add_scaled(term, 1, pass);
  }
  return acc.take();
}

LaurentPoly poly_subst(const LaurentPoly& p, const Bindings& bindings) {
  if (bindings.empty()) return p;
  return poly_subst(p, bindings, bindings.begin()->second.vars());
}

LaurentPoly poly_diff(const LaurentPoly& p, std::string_view var) {
  const std::size_t i = p.vars().require(var);
  std::vector<LaurentPoly::Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    const int e = t.monomial[i];
    if (e == 0) continue;
    Monomial m = t.monomial;
    m.set(i, e - 1);
    out.push_back({m, t.coefficient * e});
  }
  return LaurentPoly::from_terms(p.vars(), std::move(out));
}

}  // namespace chargen
