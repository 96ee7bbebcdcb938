#include "albert/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace e6 {

FMatrix FMatrix::identity(const Field& f, size_t n) {
  FMatrix m(f, n, n);
  for (size_t i = 0; i < n; ++i) m.set_idx(i, i, 1);
  return m;
}

FMatrix FMatrix::operator*(const FMatrix& o) const {
  require_same_field(*field_, *o.field_);
  if (cols_ != o.rows_) throw std::invalid_argument("matrix dimension mismatch");
  FMatrix r(*field_, rows_, o.cols_);
  const Field& f = *field_;
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      unsigned aik = idx(i, k);
      if (aik == 0) continue;
      for (size_t j = 0; j < o.cols_; ++j) {
        unsigned t = f.mul_idx(aik, o.idx(k, j));
        r.set_idx(i, j, f.add_idx(r.idx(i, j), t));
      }
    }
  return r;
}

FMatrix FMatrix::transpose() const {
  FMatrix r(*field_, cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r.set_idx(j, i, idx(i, j));
  return r;
}

size_t FMatrix::rref() {
  const Field& f = *field_;
  size_t r = 0;
  for (size_t col = 0; col < cols_ && r < rows_; ++col) {
    size_t piv = r;
    while (piv < rows_ && idx(piv, col) == 0) ++piv;
    if (piv == rows_) continue;
    if (piv != r)
      for (size_t j = 0; j < cols_; ++j) std::swap(a_[r * cols_ + j], a_[piv * cols_ + j]);
    unsigned inv = f.inv_idx(idx(r, col));
    for (size_t j = 0; j < cols_; ++j) set_idx(r, j, f.mul_idx(idx(r, j), inv));
    for (size_t i = 0; i < rows_; ++i) {
      if (i == r) continue;
      unsigned c = idx(i, col);
      if (c == 0) continue;
      for (size_t j = 0; j < cols_; ++j)
        set_idx(i, j, f.sub_idx(idx(i, j), f.mul_idx(c, idx(r, j))));
    }
    ++r;
  }
  return r;
}

size_t FMatrix::rank() const {
  FMatrix tmp = *this;
  return tmp.rref();
}

std::vector<std::vector<uint8_t>> FMatrix::kernel_basis() const {
  FMatrix m = *this;
  size_t rank = m.rref();
  const Field& f = *field_;
  std::vector<long> pivot_of_col(cols_, -1);
  for (size_t r = 0; r < rank; ++r)
    for (size_t col = 0; col < cols_; ++col)
      if (m.idx(r, col) != 0) {
        pivot_of_col[col] = static_cast<long>(r);
        break;
      }
  std::vector<std::vector<uint8_t>> basis;
  for (size_t col = 0; col < cols_; ++col) {
    if (pivot_of_col[col] >= 0) continue;
    std::vector<uint8_t> v(cols_, 0);
    v[col] = 1;
    for (size_t c2 = 0; c2 < cols_; ++c2)
      if (pivot_of_col[c2] >= 0)
        v[c2] = static_cast<uint8_t>(f.neg_idx(m.idx(static_cast<size_t>(pivot_of_col[c2]), col)));
    basis.push_back(std::move(v));
  }
  canonicalize_span(f, basis);
  return basis;
}

FMatrix FMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("only square matrices invert");
  const Field& f = *field_;
  FMatrix aug(f, rows_, 2 * cols_);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t j = 0; j < cols_; ++j) aug.set_idx(i, j, idx(i, j));
    aug.set_idx(i, cols_ + i, 1);
  }
  size_t rank = aug.rref();
  for (size_t i = 0; i < rows_; ++i)
    if (aug.idx(i, i) != 1) throw std::domain_error("matrix is singular");
  (void)rank;
  FMatrix r(f, rows_, cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r.set_idx(i, j, aug.idx(i, cols_ + j));
  return r;
}

std::vector<uint8_t> FMatrix::apply_row(const std::vector<uint8_t>& v) const {
  if (v.size() != rows_) throw std::invalid_argument("vector length mismatch");
  const Field& f = *field_;
  std::vector<uint8_t> r(cols_, 0);
  for (size_t i = 0; i < rows_; ++i) {
    unsigned vi = v[i];
    if (vi == 0) continue;
    for (size_t j = 0; j < cols_; ++j)
      r[j] = static_cast<uint8_t>(f.add_idx(r[j], f.mul_idx(vi, idx(i, j))));
  }
  return r;
}

void canonicalize_span(const Field& f, std::vector<std::vector<uint8_t>>& rows) {
  if (rows.empty()) return;
  size_t cols = rows[0].size();
  FMatrix m(f, rows.size(), cols);
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols; ++j) m.set_idx(i, j, rows[i][j]);
  size_t rank = m.rref();
  rows.assign(rank, std::vector<uint8_t>(cols, 0));
  for (size_t i = 0; i < rank; ++i)
    for (size_t j = 0; j < cols; ++j) rows[i][j] = static_cast<uint8_t>(m.idx(i, j));
}

}  // namespace e6
