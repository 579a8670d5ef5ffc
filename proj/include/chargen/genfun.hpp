#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "chargen/calogero.hpp"
#include "chargen/diff_operator.hpp"
#include "chargen/golden.hpp"
#include "chargen/series.hpp"

namespace chargen {

/// A rational generating function sum_m t^m c_m(z), expanded in the
/// t-variables named by `expansion_vars`.
struct GenFun {
  std::string name;
  std::vector<std::string> expansion_vars;
  RationalFn fn;

  VarSet expansion_varset() const { return VarSet(expansion_vars); }
};

GenFun build_G(const GoldenSet& golden = GoldenSet::embedded());
GenFun build_E(const GoldenSet& golden = GoldenSet::embedded());
// Characters of the self-conjugate representations (m1, m2, m1).
GenFun build_G_real(const GoldenSet& golden = GoldenSet::embedded());
GenFun build_E_real(const GoldenSet& golden = GoldenSet::embedded());

enum class RestrictedKind { First, Third, Mixed };
std::string_view to_string(RestrictedKind k);
// "first" | "third" (alias "spinor") | "mixed"; throws UnknownKind.
RestrictedKind parse_restricted_kind(std::string_view s);

// B3/C3 characters along the (m,0,0), (0,0,m) and (m1,0,m3) families; the
// z-variables are the algebra's own fundamental characters. Throws
// UnknownKind for A3.
GenFun build_restricted(Algebra algebra, RestrictedKind kind,
                        const GoldenSet& golden = GoldenSet::embedded());

// m_i^2 -> t_i^2 d_i^2 + t_i d_i, m_i m_j -> t_i t_j d_i d_j, m_i -> t_i d_i.
DiffOperator delta_t_from_eigen(const EigenForm& e, const VarSet& vars);
const DiffOperator& delta_t();       // over t1 t2 t3
const DiffOperator& delta_t_real();  // over t1 t2, from m3 = m1

TruncatedSeries expand_genfun(const GenFun& g, std::span<const int> caps);

// (op_t - op_z) G expanded to caps; op_t acts on the t-exponents, op_z on
// every coefficient. Zero iff the PDE holds within the box.
TruncatedSeries verify_pde(const GenFun& g, const DiffOperator& op_t, std::span<const int> caps,
                           const DiffOperator& op_z = delta_z());

// Symbolic check of (op_t - op_z)(N/D) = 0: clears denominators and returns
// the numerator D^3 (op_t - op_z)(N/D), which must be the zero polynomial.
// Slow on the full G; intended for small cases.
LaurentPoly pde_numerator(const GenFun& g, const DiffOperator& op_t,
                          const DiffOperator& op_z = delta_z());

}  // namespace chargen
