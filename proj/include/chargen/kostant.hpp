#pragma once

#include <array>

#include "chargen/golden.hpp"
#include "chargen/rational.hpp"
#include "chargen/roots.hpp"
#include "chargen/series.hpp"

namespace chargen {

/// Kostant partition function of A3: the number of ways to write
/// k1 a1 + k2 a2 + k3 a3 as a non-negative integer combination of the six
/// positive roots. Zero off the non-negative root lattice. Evaluated from the
/// four piecewise cubic closed forms (after symmetrising to k1 <= k3); each
/// branch value must be divisible by 6, else ConsistencyError.
Integer kostant_Z(const RootCoords& k);
Integer kostant_Z(int k1, int k2, int k3);

// Expansion of 1/[(1-t1)(1-t2)(1-t3)(1-t1t2t3)(1-t1t2)(1-t2t3)].
TruncatedSeries kostant_Z_series(const std::array<int, 3>& caps,
                                 const GoldenSet& golden = GoldenSet::embedded());

/// Multiplicity of weight n in the A3 irrep of highest weight m, as the
/// alternating Weyl-group sum of kostant_Z.
Integer kostant_multiplicity(const Weight& m, const Weight& n);

}  // namespace chargen
