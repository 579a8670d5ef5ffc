#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "chargen/laurent_poly.hpp"
#include "chargen/rational.hpp"

namespace chargen {

enum class Algebra { A3, B3, C3 };

std::string_view to_string(Algebra a);
// "a3" | "b3" | "c3" (case-insensitive); throws UnknownKind.
Algebra parse_algebra(std::string_view s);

/// Integer coordinates of a weight in the fundamental-weight basis (Dynkin
/// labels). Dominant means every label is non-negative.
using Weight = std::array<int, 3>;

std::string format_weight(const Weight& w);  // "1,0,1"
Weight parse_weight(std::string_view s);      // throws ParseError
bool is_dominant(const Weight& w);
Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);
Weight reversed(const Weight& w);  // diagram flip (m1,m2,m3) -> (m3,m2,m1)

/// Coordinates in the simple-root basis.
struct RootCoords {
  std::array<Rational, 3> k;
  bool integral() const;
  bool non_negative() const;
  Rational height() const { return k[0] + k[1] + k[2]; }
};

using IntMatrix3 = std::array<std::array<int, 3>, 3>;

struct WeylElement {
  IntMatrix3 matrix;  // acts on Dynkin labels: (w.l)_i = sum_j matrix[i][j] l_j
  int sign = 1;       // (-1)^length

  Weight apply(const Weight& w) const;
};

/// Immutable root data for A3, B3 or C3. Row i of the Cartan matrix is the
/// simple root alpha_i written in fundamental-weight coordinates; for B3 and
/// C3, alpha_3 is the root of unequal length.
class RootSystem {
 public:
  static const RootSystem& get(Algebra a);

  Algebra label() const { return label_; }
  const IntMatrix3& cartan() const { return cartan_; }
  Weight simple_root(std::size_t i) const { return cartan_[i]; }
  // Squared lengths of the simple roots, up to a common factor.
  const std::array<int, 3>& root_length_sq() const { return length_sq_; }
  // Positive roots in simple-root coordinates, sorted by height.
  const std::vector<Weight>& positive_roots() const { return positive_roots_; }
  const std::vector<WeylElement>& weyl_group() const { return weyl_; }
  static constexpr Weight rho() { return {1, 1, 1}; }

  RootCoords to_root_coords(const Weight& w) const;
  Weight from_root_coords(const Weight& k) const;
  // (a, b) for weights in fundamental coordinates, up to the same factor as
  // root_length_sq.
  Rational inner(const Weight& a, const Weight& b) const;

 private:
  explicit RootSystem(Algebra a);

  Algebra label_;
  IntMatrix3 cartan_{};
  std::array<int, 3> length_sq_{};
  std::array<std::array<Rational, 3>, 3> inv_cartan_t_{};
  std::vector<WeylElement> weyl_;
  std::vector<Weight> positive_roots_;
};

// Closure of the simple reflections; identity first.
std::vector<WeylElement> enumerate_weyl(const RootSystem& sys);

RootCoords to_root_coords(const RootSystem& sys, const Weight& w);

// Character as a Laurent polynomial in x1,x2,x3, where x^a stands for the
// weight with Dynkin labels a; computed as the ratio of Weyl alternants.
LaurentPoly weyl_character(const RootSystem& sys, const Weight& highest);

Integer weyl_dim(const RootSystem& sys, const Weight& highest);

// A3 only: the (m1+1)(m2+1)(m3+1)(m1+m2+2)(m2+m3+2)(m1+m2+m3+3)/12 product.
Integer a3_dim_formula(const Weight& m);
// Dimension of the self-conjugate A3 representation (m1, m2, m1).
Integer a3_real_dim_formula(int m1, int m2);

}  // namespace chargen
