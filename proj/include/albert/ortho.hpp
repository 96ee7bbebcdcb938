#pragma once

#include <cstdint>
#include <vector>

#include "albert/linalg.hpp"
#include "albert/octonion.hpp"

namespace e6 {

/// Quadratic space: the Gram matrix of the polar form f plus the values of
/// Q on the basis vectors, which the Gram matrix alone does not determine
/// in characteristic 2.  Q(sum x_i b_i) = sum x_i^2 Q(b_i)
/// + sum_{i<j} x_i x_j f(b_i, b_j); the Gram matrix must have full rank.
class QuadSpace {
 public:
  QuadSpace(const Field& f, FMatrix gram, std::vector<uint8_t> qdiag);

  const Field& field() const { return *field_; }
  size_t dim() const { return gram_.rows(); }
  const FMatrix& gram() const { return gram_; }
  FieldElement q_basis(size_t i) const { return field_->element(qdiag_[i]); }

  FieldElement q(const std::vector<uint8_t>& x) const;
  FieldElement polar(const std::vector<uint8_t>& x, const std::vector<uint8_t>& y) const;

 private:
  const Field* field_;
  FMatrix gram_;
  std::vector<uint8_t> qdiag_;
};

/// A linear map preserving the quadratic form (checked at construction on
/// all basis vectors and basis pairs).
class OrthoElement {
 public:
  OrthoElement(const QuadSpace& space, FMatrix m);
  const FMatrix& matrix() const { return m_; }

 private:
  FMatrix m_;
};

bool is_isometry(const QuadSpace& space, const FMatrix& m);

/// Reflection in the hyperplane orthogonal to v: x -> x - (f(x,v)/Q(v)) v.
/// Throws for isotropic v.
OrthoElement reflection(const QuadSpace& space, const std::vector<uint8_t>& v);

/// dim Im(I - g) mod 2, defined over characteristic-2 fields only.
unsigned qdet(const QuadSpace& space, const OrthoElement& g);

/// The quadratic space of dimension 2m+2 extending W by a hyperbolic pair
/// (v1, v2), with basis ordered (v1, w_1..w_2m, v2).
QuadSpace extend_hyperbolic(const QuadSpace& w);

/// The stabiliser element of v1 determined by an isometry A of W and a
/// vector u1 in W: block matrix with rows (1 | 0 | 0),
/// (-A B^T u1^T | A | 0), (-Q_W(u1) | u1 | 1), acting on row vectors of
/// the extended space.
OrthoElement hat_element(const QuadSpace& w, const OrthoElement& a,
                         const std::vector<uint8_t>& u1);

/// The octonion algebra's norm as an 8-dimensional quadratic space.
QuadSpace octonion_quad_space(const Field& f);
std::vector<uint8_t> octonion_coords(const Octonion& x);

}  // namespace e6
