#include "albert/ortho.hpp"

#include <stdexcept>

namespace e6 {

QuadSpace::QuadSpace(const Field& f, FMatrix gram, std::vector<uint8_t> qdiag)
    : field_(&f), gram_(std::move(gram)), qdiag_(std::move(qdiag)) {
  size_t n = gram_.rows();
  if (gram_.cols() != n || qdiag_.size() != n)
    throw std::invalid_argument("gram/qdiag dimensions disagree");
  for (size_t i = 0; i < n; ++i) {
    if (gram_.idx(i, i) != f.add_idx(qdiag_[i], qdiag_[i]))
      throw std::invalid_argument("gram diagonal must equal 2 Q(basis)");
    for (size_t j = i + 1; j < n; ++j)
      if (gram_.idx(i, j) != gram_.idx(j, i))
        throw std::invalid_argument("gram matrix must be symmetric");
  }
  if (gram_.rank() != n) throw std::invalid_argument("quadratic form is singular");
}

FieldElement QuadSpace::q(const std::vector<uint8_t>& x) const {
  const Field& f = *field_;
  size_t n = dim();
  if (x.size() != n) throw std::invalid_argument("vector length mismatch");
  unsigned acc = 0;
  for (size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    acc = f.add_idx(acc, f.mul_idx(f.mul_idx(x[i], x[i]), qdiag_[i]));
    for (size_t j = i + 1; j < n; ++j)
      if (x[j]) acc = f.add_idx(acc, f.mul_idx(f.mul_idx(x[i], x[j]), gram_.idx(i, j)));
  }
  return f.element(acc);
}

FieldElement QuadSpace::polar(const std::vector<uint8_t>& x, const std::vector<uint8_t>& y) const {
  const Field& f = *field_;
  size_t n = dim();
  unsigned acc = 0;
  for (size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (size_t j = 0; j < n; ++j)
      if (y[j]) acc = f.add_idx(acc, f.mul_idx(f.mul_idx(x[i], y[j]), gram_.idx(i, j)));
  }
  return f.element(acc);
}

bool is_isometry(const QuadSpace& space, const FMatrix& m) {
  size_t n = space.dim();
  if (m.rows() != n || m.cols() != n) return false;
  std::vector<std::vector<uint8_t>> img(n, std::vector<uint8_t>(n, 0));
  for (size_t i = 0; i < n; ++i) {
    std::vector<uint8_t> ei(n, 0);
    ei[i] = 1;
    img[i] = m.apply_row(ei);
    if (space.q(img[i]) != space.q_basis(i)) return false;
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      unsigned expect = space.gram().idx(i, j);
      if (space.polar(img[i], img[j]) != space.field().element(expect)) return false;
    }
  return true;
}

OrthoElement::OrthoElement(const QuadSpace& space, FMatrix m) : m_(std::move(m)) {
  if (!is_isometry(space, m_)) throw std::invalid_argument("matrix does not preserve the form");
}

OrthoElement reflection(const QuadSpace& space, const std::vector<uint8_t>& v) {
  const Field& f = space.field();
  FieldElement qv = space.q(v);
  if (qv.is_zero()) throw std::domain_error("cannot reflect in an isotropic vector");
  FieldElement qinv = qv.inv();
  size_t n = space.dim();
  FMatrix m(f, n, n);
  for (size_t i = 0; i < n; ++i) {
    std::vector<uint8_t> ei(n, 0);
    ei[i] = 1;
    FieldElement coef = space.polar(ei, v) * qinv;
    for (size_t j = 0; j < n; ++j) {
      FieldElement val = f.element(i == j ? 1u : 0u) - coef * f.element(v[j]);
      m.set(i, j, val);
    }
  }
  return OrthoElement(space, std::move(m));
}

unsigned qdet(const QuadSpace& space, const OrthoElement& g) {
  const Field& f = space.field();
  if (f.p() != 2) throw std::invalid_argument("qdet is defined in characteristic 2 only");
  size_t n = space.dim();
  FMatrix d(f, n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      d.set(i, j, f.element(i == j ? 1u : 0u) - g.matrix().at(i, j));
  return static_cast<unsigned>(d.rank() % 2);
}

QuadSpace extend_hyperbolic(const QuadSpace& w) {
  const Field& f = w.field();
  size_t n = w.dim();
  if (n > 64) throw std::invalid_argument("quadratic space too large");
  FMatrix gram(f, n + 2, n + 2);
  std::vector<uint8_t> qdiag(n + 2, 0);
  gram.set_idx(0, n + 1, 1);
  gram.set_idx(n + 1, 0, 1);
  for (size_t i = 0; i < n; ++i) {
    qdiag[i + 1] = static_cast<uint8_t>(w.q_basis(i).index());
    for (size_t j = 0; j < n; ++j) gram.set_idx(i + 1, j + 1, w.gram().idx(i, j));
  }
  return QuadSpace(f, std::move(gram), std::move(qdiag));
}

OrthoElement hat_element(const QuadSpace& w, const OrthoElement& a,
                         const std::vector<uint8_t>& u1) {
  const Field& f = w.field();
  size_t n = w.dim();
  if (u1.size() != n) throw std::invalid_argument("u1 must live in W");
  QuadSpace big = extend_hyperbolic(w);
  FMatrix m(f, n + 2, n + 2);
  m.set_idx(0, 0, 1);
  m.set_idx(n + 1, n + 1, 1);
  // corner column: -A B^T u1^T, with B the Gram matrix of W
  std::vector<uint8_t> btu(n, 0);
  for (size_t i = 0; i < n; ++i) {
    unsigned acc = 0;
    for (size_t j = 0; j < n; ++j)
      acc = f.add_idx(acc, f.mul_idx(w.gram().idx(j, i), u1[j]));
    btu[i] = static_cast<uint8_t>(acc);
  }
  for (size_t i = 0; i < n; ++i) {
    unsigned acc = 0;
    for (size_t j = 0; j < n; ++j)
      acc = f.add_idx(acc, f.mul_idx(a.matrix().idx(i, j), btu[j]));
    m.set_idx(i + 1, 0, f.neg_idx(acc));
    for (size_t j = 0; j < n; ++j) m.set_idx(i + 1, j + 1, a.matrix().idx(i, j));
  }
  m.set_idx(n + 1, 0, f.neg_idx(w.q(u1).index()));
  for (size_t j = 0; j < n; ++j) m.set_idx(n + 1, j + 1, u1[j]);
  return OrthoElement(big, std::move(m));
}

QuadSpace octonion_quad_space(const Field& f) {
  FMatrix gram(f, 8, 8);
  const unsigned pairs[4][2] = {{kEm1, kE1}, {kEwb, kEmwb}, {kEw, kEmw}, {kE0, kEm0}};
  for (auto& pr : pairs) {
    gram.set_idx(pr[0], pr[1], 1);
    gram.set_idx(pr[1], pr[0], 1);
  }
  return QuadSpace(f, std::move(gram), std::vector<uint8_t>(8, 0));
}

std::vector<uint8_t> octonion_coords(const Octonion& x) {
  std::vector<uint8_t> v(8);
  for (unsigned i = 0; i < 8; ++i) v[i] = static_cast<uint8_t>(x.coord_idx(i));
  return v;
}

}  // namespace e6
