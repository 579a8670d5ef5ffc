#pragma once

#include <map>
#include <memory>
#include <shared_mutex>
#include <span>
#include <vector>

#include "chargen/diff_operator.hpp"
#include "chargen/golden.hpp"
#include "chargen/roots.hpp"

namespace chargen {

/// Quadratic-plus-linear form sum_{i<=j} q_ij m_i m_j + sum_i l_i m_i.
class EigenForm {
 public:
  explicit EigenForm(std::size_t n);

  // The A3 Calogero-Sutherland spectrum at coupling 1.
  static EigenForm a3();

  std::size_t size() const { return linear_.size(); }
  const Rational& quadratic(std::size_t i, std::size_t j) const;
  const Rational& linear(std::size_t i) const { return linear_[i]; }
  void set_quadratic(std::size_t i, std::size_t j, Rational v);
  void set_linear(std::size_t i, Rational v) { linear_[i] = std::move(v); }

  Rational evaluate(std::span<const int> m) const;

  // Pull back along m_old[i] = m_new[map[i]]; e.g. {0, 1, 0} restricts the
  // A3 form to self-conjugate weights (m1, m2, m1).
  EigenForm substitute(std::span<const std::size_t> map, std::size_t new_size) const;

  friend bool operator==(const EigenForm&, const EigenForm&) = default;

 private:
  std::vector<std::vector<Rational>> quad_;  // upper triangle used
  std::vector<Rational> linear_;
};

/// Irreducible A3 character as a polynomial in the fundamental characters.
struct CharPoly {
  Weight label;
  LaurentPoly body;  // over z1, z2, z3
};

// The operator Delta_z in z1, z2, z3 (including the global 1/2).
const DiffOperator& delta_z();

// Throws NegativeExponentInput for Laurent input.
LaurentPoly apply_delta_z(const LaurentPoly& p);

// epsilon_m; throws NonDominantWeight.
Rational eigenvalue(const Weight& m);

// Solves Delta_z chi = epsilon_m chi by back-substitution over the dominant
// monomials z^a below m. Throws EigenvalueCollision if epsilon_a = epsilon_m
// for a required a != m, NonIntegral if a coefficient is not an integer.
CharPoly solve_character(const Weight& m);

// z_i -> fundamental characters in x.
LaurentPoly char_to_x(const CharPoly& c, const GoldenSet& golden = GoldenSet::embedded());
LaurentPoly z_to_x(const LaurentPoly& p, const GoldenSet& golden = GoldenSet::embedded());

std::map<Weight, Integer> weight_multiplicities(const Weight& m);

/// Memo table of solved characters. Concurrent readers share a lock;
/// solving happens outside the lock and the first inserted value wins, so
/// results do not depend on thread interleaving.
class CharacterCache {
 public:
  const CharPoly& get(const Weight& m);
  std::size_t size() const;

 private:
  mutable std::shared_mutex mu_;
  std::map<Weight, std::unique_ptr<const CharPoly>> table_;
};

}  // namespace chargen
