#include "albert/albert.hpp"

#include <stdexcept>

#include "albert/linalg.hpp"

namespace e6 {

AlbertVector::AlbertVector(const FieldElement& a, const FieldElement& b, const FieldElement& c,
                           const Octonion& A, const Octonion& B, const Octonion& C)
    : field_(&a.field()), v_{} {
  require_same_field(*field_, b.field());
  require_same_field(*field_, c.field());
  require_same_field(*field_, A.field());
  require_same_field(*field_, B.field());
  require_same_field(*field_, C.field());
  v_[0] = static_cast<uint8_t>(a.index());
  v_[1] = static_cast<uint8_t>(b.index());
  v_[2] = static_cast<uint8_t>(c.index());
  for (unsigned i = 0; i < 8; ++i) {
    v_[3 + i] = static_cast<uint8_t>(A.coord_idx(i));
    v_[11 + i] = static_cast<uint8_t>(B.coord_idx(i));
    v_[19 + i] = static_cast<uint8_t>(C.coord_idx(i));
  }
}

Octonion AlbertVector::oct_part(unsigned off) const {
  Octonion x(*field_);
  for (unsigned i = 0; i < 8; ++i) x.set_coord(i, field_->element(v_[off + i]));
  return x;
}

bool AlbertVector::is_zero() const {
  for (unsigned i = 0; i < kDim; ++i)
    if (v_[i]) return false;
  return true;
}

AlbertVector AlbertVector::operator+(const AlbertVector& o) const {
  require_same_field(*field_, *o.field_);
  AlbertVector r(*field_);
  for (unsigned i = 0; i < kDim; ++i)
    r.v_[i] = static_cast<uint8_t>(field_->add_idx(v_[i], o.v_[i]));
  return r;
}

AlbertVector AlbertVector::operator-(const AlbertVector& o) const {
  require_same_field(*field_, *o.field_);
  AlbertVector r(*field_);
  for (unsigned i = 0; i < kDim; ++i)
    r.v_[i] = static_cast<uint8_t>(field_->sub_idx(v_[i], o.v_[i]));
  return r;
}

bool AlbertVector::operator==(const AlbertVector& o) const {
  require_same_field(*field_, *o.field_);
  return v_ == o.v_;
}

AlbertVector operator*(const FieldElement& s, const AlbertVector& x) {
  const Field& f = x.field();
  require_same_field(s.field(), f);
  AlbertVector r(f);
  for (unsigned i = 0; i < AlbertVector::kDim; ++i)
    r.set_coord(i, f.element(f.mul_idx(s.index(), x.coord_idx(i))));
  return r;
}

const char* to_string(Color c) {
  switch (c) {
    case Color::White: return "white";
    case Color::Grey: return "grey";
    case Color::Black: return "black";
  }
  return "?";
}

FieldElement delta(const AlbertVector& x) {
  FieldElement a = x.a(), b = x.b(), c = x.c();
  Octonion A = x.A(), B = x.B(), C = x.C();
  // T(ABC) is bracketing-free by trace 3-associativity.
  return a * b * c - a * norm(A) - b * norm(B) - c * norm(C) + trace(A * (B * C));
}

FieldElement mixed_form(const AlbertVector& y, const AlbertVector& x) {
  require_same_field(y.field(), x.field());
  FieldElement a = x.a(), b = x.b(), c = x.c();
  Octonion A = x.A(), B = x.B(), C = x.C();
  FieldElement d = y.a(), e = y.b(), f = y.c();
  Octonion D = y.A(), E = y.B(), F = y.C();
  FieldElement v = b * c * d + a * c * e + a * b * f;
  v = v - d * norm(A) - e * norm(B) - f * norm(C);
  v = v - a * polar(D, A) - b * polar(E, B) - c * polar(F, C);
  v = v + trace(D * (B * C)) + trace(E * (C * A)) + trace(F * (A * B));
  return v;
}

Color classify(const AlbertVector& x) {
  if (x.is_zero()) throw std::invalid_argument("the zero vector has no color");
  const Field& f = x.field();
  bool white = true;
  for (unsigned i = 0; i < AlbertVector::kDim && white; ++i)
    white = mixed_form(AlbertVector::basis(f, i), x).is_zero();
  if (white) return Color::White;
  return delta(x).is_zero() ? Color::Grey : Color::Black;
}

bool whiteness_conditions(const AlbertVector& x) {
  if (x.is_zero()) throw std::invalid_argument("the zero vector has no color");
  FieldElement a = x.a(), b = x.b(), c = x.c();
  Octonion A = x.A(), B = x.B(), C = x.C();
  if (norm(A) != b * c) return false;
  if (norm(B) != c * a) return false;
  if (norm(C) != a * b) return false;
  if (A * B != c * conj(C)) return false;
  if (B * C != a * conj(A)) return false;
  if (C * A != b * conj(B)) return false;
  return true;
}

std::vector<AlbertVector> quadratic_form_radical(
    const Field& f, const std::function<FieldElement(const AlbertVector&)>& q) {
  constexpr unsigned n = AlbertVector::kDim;
  std::vector<AlbertVector> basis;
  basis.reserve(n);
  for (unsigned i = 0; i < n; ++i) basis.push_back(AlbertVector::basis(f, i));
  std::vector<FieldElement> qdiag;
  qdiag.reserve(n);
  for (unsigned i = 0; i < n; ++i) qdiag.push_back(q(basis[i]));

  // Polarized bilinear form B(x, y) = q(x+y) - q(x) - q(y).
  FMatrix gram(f, n, n);
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = i; j < n; ++j) {
      FieldElement bij =
          (i == j) ? qdiag[i] + qdiag[i] : q(basis[i] + basis[j]) - qdiag[i] - qdiag[j];
      gram.set(i, j, bij);
      gram.set(j, i, bij);
    }
  }
  auto ker = gram.kernel_basis();

  if (f.p() != 2) {
    // q vanishes on ker(B) automatically when 2 is invertible.
    std::vector<AlbertVector> out;
    for (const auto& row : ker) {
      AlbertVector v(f);
      for (unsigned i = 0; i < n; ++i) v.set_coord(i, f.element(row[i]));
      out.push_back(v);
    }
    return out;
  }

  // Characteristic 2: on ker(B) the map q is additive with q(s x) = s^2 q(x),
  // so x -> sqrt(q(x)) is linear; cut by its kernel.
  auto sqrt2 = [&f](const FieldElement& v) {
    for (unsigned i = 0; i < f.q(); ++i)
      if (f.mul_idx(i, i) == v.index()) return f.element(i);
    throw std::logic_error("squaring is a bijection in characteristic 2");
  };
  size_t m = ker.size();
  FMatrix cond(f, 1, m);
  std::vector<AlbertVector> kv;
  for (size_t i = 0; i < m; ++i) {
    AlbertVector v(f);
    for (unsigned j = 0; j < n; ++j) v.set_coord(j, f.element(ker[i][j]));
    kv.push_back(v);
    cond.set(0, i, sqrt2(q(v)));
  }
  auto lambda_basis = cond.kernel_basis();
  std::vector<std::vector<uint8_t>> rows;
  for (const auto& lam : lambda_basis) {
    std::vector<uint8_t> row(n, 0);
    for (size_t i = 0; i < m; ++i) {
      if (lam[i] == 0) continue;
      for (unsigned j = 0; j < n; ++j)
        row[j] = static_cast<uint8_t>(
            f.add_idx(row[j], f.mul_idx(lam[i], kv[i].coord_idx(j))));
    }
    rows.push_back(std::move(row));
  }
  canonicalize_span(f, rows);
  std::vector<AlbertVector> out;
  for (const auto& row : rows) {
    AlbertVector v(f);
    for (unsigned j = 0; j < n; ++j) v.set_coord(j, f.element(row[j]));
    out.push_back(v);
  }
  return out;
}

std::vector<AlbertVector> radical_17(const AlbertVector& w) {
  if (classify(w) != Color::White)
    throw std::invalid_argument("radical_17 requires a white vector");
  const Field& f = w.field();
  return quadratic_form_radical(f, [&](const AlbertVector& x) { return mixed_form(w, x); });
}

FieldElement q10(const AlbertVector& x) {
  if (!in_subspace(x, kMaskJ10abC))
    throw std::invalid_argument("q10 is defined on vectors (a,b,0|0,0,C)");
  return x.a() * x.b() - norm(x.C());
}

FieldElement q8(const Octonion& c) { return norm(c); }

bool polarization_check(const AlbertVector& x, const AlbertVector& y, const FieldElement& alpha) {
  const Field& f = x.field();
  if (f.q() < 3) throw std::invalid_argument("polarization check needs q >= 3");
  if (alpha.is_zero() || alpha == f.one())
    throw std::invalid_argument("alpha must avoid 0 and 1");
  FieldElement ia = alpha.inv();
  FieldElement iam1 = (alpha - f.one()).inv();
  AlbertVector xay = x + alpha * y;
  FieldElement comb = ia * iam1 * delta(xay) - iam1 * delta(x + y) + ia * delta(x) -
                      (alpha + f.one()) * delta(y);
  return comb == mixed_form(x, y);
}

bool in_subspace(const AlbertVector& x, uint32_t mask) {
  for (unsigned i = 0; i < AlbertVector::kDim; ++i)
    if (!(mask & (1u << i)) && x.coord_idx(i) != 0) return false;
  return true;
}

}  // namespace e6
