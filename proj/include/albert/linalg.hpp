#pragma once

#include <cstdint>
#include <vector>

#include "albert/gf.hpp"

namespace e6 {

/// Dense matrix over a finite field, element indices stored row-major.
class FMatrix {
 public:
  FMatrix(const Field& f, size_t rows, size_t cols)
      : field_(&f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static FMatrix identity(const Field& f, size_t n);

  const Field& field() const { return *field_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  unsigned idx(size_t i, size_t j) const { return a_[i * cols_ + j]; }
  void set_idx(size_t i, size_t j, unsigned v) { a_[i * cols_ + j] = static_cast<uint8_t>(v); }
  FieldElement at(size_t i, size_t j) const { return field_->element(idx(i, j)); }
  void set(size_t i, size_t j, const FieldElement& v) { set_idx(i, j, v.index()); }

  FMatrix operator*(const FMatrix& o) const;
  bool operator==(const FMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_ && field_->same_spec(*o.field_);
  }
  bool operator!=(const FMatrix& o) const { return !(*this == o); }

  FMatrix transpose() const;

  /// Reduces in place to reduced row-echelon form (pivot search top-down,
  /// leftmost column first); returns the rank.
  size_t rref();
  size_t rank() const;

  /// Basis of {v : M v = 0} (column-vector kernel), rows of the result,
  /// canonicalized to reduced row-echelon form.
  std::vector<std::vector<uint8_t>> kernel_basis() const;

  /// Inverse via Gaussian elimination; throws std::domain_error if singular.
  FMatrix inverse() const;

  /// Row vector times matrix.
  std::vector<uint8_t> apply_row(const std::vector<uint8_t>& v) const;

 private:
  const Field* field_;
  size_t rows_, cols_;
  std::vector<uint8_t> a_;
};

/// RREF-canonicalizes a list of row vectors (a subspace basis) in place;
/// drops zero rows.  Two lists span the same subspace iff their canonical
/// forms are equal.
void canonicalize_span(const Field& f, std::vector<std::vector<uint8_t>>& rows);

}  // namespace e6
