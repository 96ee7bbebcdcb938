#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "albert/gf.hpp"

namespace e6 {

/// Basis indices of the split octonion algebra, in the fixed order
/// e-1, ewb, ew, e0, e-0, e-w, e-wb, e1 (w short for omega, wb for its bar).
enum OctBasis : unsigned {
  kEm1 = 0,
  kEwb = 1,
  kEw = 2,
  kE0 = 3,
  kEm0 = 4,
  kEmw = 5,
  kEmwb = 6,
  kE1 = 7,
};

/// Product of basis vectors e_i * e_j as a signed basis index:
/// 0 means the zero product, +-(k+1) means +-e_k.  The multiplicative
/// identity is e0 + e-0; the norm pairs coordinates (0,7), (1,6), (2,5),
/// (3,4) and the trace reads coordinates 3 and 4.
constexpr int8_t kOctMulTable[8][8] = {
    {0, 0, 0, 0, +1, +2, -3, -4},
    {0, 0, -1, +2, 0, 0, -5, +6},
    {0, +1, 0, +3, 0, -5, 0, -7},
    {+1, 0, 0, +4, 0, +6, +7, 0},
    {0, +2, +3, 0, +5, 0, 0, +8},
    {-2, 0, -4, 0, +6, 0, +8, 0},
    {+3, -4, 0, 0, +7, -8, 0, 0},
    {-5, -6, +7, +8, 0, 0, 0, 0},
};

/// Element of the split octonion algebra over a finite field, as eight
/// coordinates in the fixed basis order.  Pure value semantics.
class Octonion {
 public:
  Octonion() : field_(nullptr), c_{} {}
  explicit Octonion(const Field& f) : field_(&f), c_{} {}

  static Octonion zero(const Field& f) { return Octonion(f); }
  static Octonion one(const Field& f) {
    Octonion x(f);
    x.c_[kE0] = 1;
    x.c_[kEm0] = 1;
    return x;
  }
  static Octonion basis(const Field& f, unsigned i) {
    Octonion x(f);
    x.c_[i] = 1;
    return x;
  }
  static Octonion from_coords(const Field& f, const std::array<FieldElement, 8>& c);

  const Field& field() const { return *field_; }
  FieldElement coord(unsigned i) const { return field_->element(c_[i]); }
  unsigned coord_idx(unsigned i) const { return c_[i]; }
  void set_coord(unsigned i, const FieldElement& v) { c_[i] = static_cast<uint8_t>(v.index()); }
  bool is_zero() const;

  Octonion operator+(const Octonion& o) const;
  Octonion operator-(const Octonion& o) const;
  Octonion operator-() const;
  Octonion operator*(const Octonion& o) const;  // the table product
  bool operator==(const Octonion& o) const;
  bool operator!=(const Octonion& o) const { return !(*this == o); }

 private:
  const Field* field_;
  std::array<uint8_t, 8> c_;
};

Octonion operator*(const FieldElement& s, const Octonion& x);

Octonion conj(const Octonion& x);
FieldElement norm(const Octonion& x);
FieldElement trace(const Octonion& x);
FieldElement polar(const Octonion& x, const Octonion& y);

/// N(x)^{-1} * conj(x); throws std::domain_error when N(x) = 0.
Octonion inverse(const Octonion& x);

/// The scalar mu with x = mu * 1; throws std::domain_error otherwise.
FieldElement as_scalar(const Octonion& x);

/// Bases (reduced row-echelon) of {y : conj(x) y = 0} and {y : y conj(x) = 0}
/// for nonzero isotropic x; both have dimension 4.
struct AnnihilatorBases {
  std::vector<Octonion> left;
  std::vector<Octonion> right;
};
AnnihilatorBases annihilators(const Octonion& x);

/// Checks (x y) z = x (y z) for every basis z (sufficient by linearity),
/// plus `trials` extra random z.
bool is_sociable_pair(const Octonion& x, const Octonion& y, unsigned trials = 0,
                      uint64_t seed = 0);

/// 8x8 matrices (row-vector convention) of y -> a*y and y -> y*a.
void left_mul_matrix(const Octonion& a, class FMatrix& out);
void right_mul_matrix(const Octonion& a, class FMatrix& out);

/// Entry that the itemized product rules and subscript symmetries generate
/// for cell (i, j), with uncovered cells zero; a transcription self-test of
/// kOctMulTable.  The table is authoritative where the two disagree.
int rule_generated_entry(unsigned i, unsigned j);

}  // namespace e6
