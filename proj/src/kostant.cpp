#include "chargen/kostant.hpp"

#include <utility>

#include "chargen/errors.hpp"

namespace chargen {

Integer kostant_Z(int k1, int k2, int k3) {
  if (k1 < 0 || k2 < 0 || k3 < 0) return 0;
  if (k1 > k3) std::swap(k1, k3);

  const Integer a = k1, b = k2, c = k3;
  Integer six_z;
  if (k1 >= k2) {
    six_z = (b + 1) * (b + 2) * (b + 3);
  } else if (k3 >= k2) {
    six_z = (a + 1) * (a + 2) * (3 * b - 2 * a + 3);
  } else if (k1 <= k2 - k3) {
    six_z = (a + 1) * (a + 2) * (3 * c - a + 3);
  } else {
    six_z = (b - c + 1) * (b - c + 2) * (2 * b - 3 * a + c + 3) -
            (a - b + c) * (3 * a + 3 * c - 12 * b + 2 * a * a + 2 * c * c - b * b - a * b -
                           2 * a * c - b * c - 11);
  }
  if (six_z % 6 != 0)
    throw ConsistencyError("Kostant closed form not divisible by 6 at (" + std::to_string(k1) +
                           "," + std::to_string(k2) + "," + std::to_string(k3) + ")");
  return six_z / 6;
}

Integer kostant_Z(const RootCoords& k) {
  if (!k.integral() || !k.non_negative()) return 0;
  return kostant_Z(static_cast<int>(k.k[0].get_num().get_si()),
                   static_cast<int>(k.k[1].get_num().get_si()),
                   static_cast<int>(k.k[2].get_num().get_si()));
}

TruncatedSeries kostant_Z_series(const std::array<int, 3>& caps, const GoldenSet& golden) {
  const LaurentPoly den = golden.poly("a3_kostant_den", t_vars());
  return series_expand(RationalFn(LaurentPoly(t_vars(), 1), den), t_vars().names(),
                       {caps.begin(), caps.end()});
}

Integer kostant_multiplicity(const Weight& m, const Weight& n) {
  if (!is_dominant(m)) throw NonDominantWeight("weight " + format_weight(m) + " is not dominant");
  const RootSystem& sys = RootSystem::get(Algebra::A3);
  const Weight mr = m + RootSystem::rho();
  const Weight nr = n + RootSystem::rho();
  Integer total = 0;
  for (const auto& w : sys.weyl_group()) {
    const Integer z = kostant_Z(sys.to_root_coords(w.apply(mr) - nr));
    if (w.sign > 0)
      total += z;
    else
      total -= z;
  }
  return total;
}

}  // namespace chargen
