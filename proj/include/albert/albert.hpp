#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "albert/octonion.hpp"

namespace e6 {

/// Vector (a, b, c | A, B, C) of the 27-dimensional space J.  Coordinates
/// are ordered a, b, c, A[0..7], B[0..7], C[0..7].
class AlbertVector {
 public:
  static constexpr unsigned kDim = 27;

  AlbertVector() : field_(nullptr), v_{} {}
  explicit AlbertVector(const Field& f) : field_(&f), v_{} {}
  AlbertVector(const FieldElement& a, const FieldElement& b, const FieldElement& c,
               const Octonion& A, const Octonion& B, const Octonion& C);

  static AlbertVector zero(const Field& f) { return AlbertVector(f); }
  static AlbertVector basis(const Field& f, unsigned i) {
    AlbertVector x(f);
    x.v_[i] = 1;
    return x;
  }

  const Field& field() const { return *field_; }
  FieldElement coord(unsigned i) const { return field_->element(v_[i]); }
  unsigned coord_idx(unsigned i) const { return v_[i]; }
  void set_coord(unsigned i, const FieldElement& x) { v_[i] = static_cast<uint8_t>(x.index()); }

  FieldElement a() const { return coord(0); }
  FieldElement b() const { return coord(1); }
  FieldElement c() const { return coord(2); }
  Octonion A() const { return oct_part(3); }
  Octonion B() const { return oct_part(11); }
  Octonion C() const { return oct_part(19); }

  bool is_zero() const;
  AlbertVector operator+(const AlbertVector& o) const;
  AlbertVector operator-(const AlbertVector& o) const;
  bool operator==(const AlbertVector& o) const;
  bool operator!=(const AlbertVector& o) const { return !(*this == o); }

 private:
  Octonion oct_part(unsigned off) const;
  const Field* field_;
  std::array<uint8_t, kDim> v_;
};

AlbertVector operator*(const FieldElement& s, const AlbertVector& x);

enum class Color { White, Grey, Black };
const char* to_string(Color c);

/// The cubic form abc - a N(A) - b N(B) - c N(C) + T(ABC).
FieldElement delta(const AlbertVector& x);

/// The mixed form M(Y, X): linear in Y, quadratic in X; the coefficient of
/// t in delta(X + tY).
FieldElement mixed_form(const AlbertVector& y, const AlbertVector& x);

/// White iff Y -> M(Y, X) vanishes on all 27 basis vectors; grey iff
/// delta = 0 otherwise; black iff delta != 0.  Throws on the zero vector.
Color classify(const AlbertVector& x);

/// The six-equation whiteness test: N(A) = bc, N(B) = ca, N(C) = ab,
/// AB = c conj(C), BC = a conj(A), CA = b conj(B).
bool whiteness_conditions(const AlbertVector& x);

/// Radical of the quadratic form q on J: vectors in the kernel of the
/// polarized bilinear form on which q also vanishes (the extra cut matters
/// only in characteristic 2).  Basis rows in reduced row-echelon form.
std::vector<AlbertVector> quadratic_form_radical(
    const Field& f, const std::function<FieldElement(const AlbertVector&)>& q);

/// Radical of X -> M(W, X) for a white vector W; 17-dimensional.
std::vector<AlbertVector> radical_17(const AlbertVector& w);

/// ab - N(C) on vectors with c = 0, A = B = 0; throws outside that subspace.
FieldElement q10(const AlbertVector& x);
/// N(C) as a quadratic form on the C coordinate.
FieldElement q8(const Octonion& c);

/// Checks the four-term combination
///   1/(alpha(alpha-1)) delta(X+alpha Y) - 1/(alpha-1) delta(X+Y)
///   + 1/alpha delta(X) - (alpha+1) delta(Y)  ==  M(X, Y)
/// for alpha outside {0, 1}; requires q >= 3.
bool polarization_check(const AlbertVector& x, const AlbertVector& y, const FieldElement& alpha);

// Coordinate-support masks for the named subspaces (bit i = coordinate i).
constexpr uint32_t kMaskA = 1u << 0;
constexpr uint32_t kMaskB = 1u << 1;
constexpr uint32_t kMaskC = 1u << 2;
constexpr uint32_t kMaskOctA = 0xFFu << 3;
constexpr uint32_t kMaskOctB = 0xFFu << 11;
constexpr uint32_t kMaskOctC = 0xFFu << 19;
constexpr uint32_t kMaskJ10abC = kMaskA | kMaskB | kMaskOctC;
constexpr uint32_t kMaskJ17cAB = kMaskC | kMaskOctA | kMaskOctB;
constexpr uint32_t kMaskJ26 = kMaskA | kMaskB | kMaskOctA | kMaskOctB | kMaskOctC;
constexpr uint32_t kMaskJ8C = kMaskOctC;
constexpr uint32_t kMaskJ16AB = kMaskOctA | kMaskOctB;
constexpr uint32_t kMaskAll = (1u << 27) - 1;

/// True when every coordinate outside the mask is zero.
bool in_subspace(const AlbertVector& x, uint32_t mask);

}  // namespace e6
