#include "albert/octonion.hpp"

#include <stdexcept>

#include "albert/linalg.hpp"
#include "albert/rng.hpp"

namespace e6 {

Octonion Octonion::from_coords(const Field& f, const std::array<FieldElement, 8>& c) {
  Octonion x(f);
  for (unsigned i = 0; i < 8; ++i) {
    require_same_field(f, c[i].field());
    x.c_[i] = static_cast<uint8_t>(c[i].index());
  }
  return x;
}

bool Octonion::is_zero() const {
  for (unsigned i = 0; i < 8; ++i)
    if (c_[i]) return false;
  return true;
}

Octonion Octonion::operator+(const Octonion& o) const {
  require_same_field(*field_, *o.field_);
  Octonion r(*field_);
  for (unsigned i = 0; i < 8; ++i) r.c_[i] = static_cast<uint8_t>(field_->add_idx(c_[i], o.c_[i]));
  return r;
}

Octonion Octonion::operator-(const Octonion& o) const {
  require_same_field(*field_, *o.field_);
  Octonion r(*field_);
  for (unsigned i = 0; i < 8; ++i) r.c_[i] = static_cast<uint8_t>(field_->sub_idx(c_[i], o.c_[i]));
  return r;
}

Octonion Octonion::operator-() const {
  Octonion r(*field_);
  for (unsigned i = 0; i < 8; ++i) r.c_[i] = static_cast<uint8_t>(field_->neg_idx(c_[i]));
  return r;
}

Octonion Octonion::operator*(const Octonion& o) const {
  require_same_field(*field_, *o.field_);
  const Field& f = *field_;
  Octonion r(f);
  for (unsigned i = 0; i < 8; ++i) {
    unsigned xi = c_[i];
    if (xi == 0) continue;
    for (unsigned j = 0; j < 8; ++j) {
      unsigned yj = o.c_[j];
      if (yj == 0) continue;
      int t = kOctMulTable[i][j];
      if (t == 0) continue;
      unsigned k = static_cast<unsigned>((t > 0 ? t : -t) - 1);
      unsigned prod = f.mul_idx(xi, yj);
      if (t < 0) prod = f.neg_idx(prod);
      r.c_[k] = static_cast<uint8_t>(f.add_idx(r.c_[k], prod));
    }
  }
  return r;
}

bool Octonion::operator==(const Octonion& o) const {
  require_same_field(*field_, *o.field_);
  return c_ == o.c_;
}

Octonion operator*(const FieldElement& s, const Octonion& x) {
  require_same_field(s.field(), x.field());
  const Field& f = x.field();
  Octonion r(f);
  for (unsigned i = 0; i < 8; ++i)
    r.set_coord(i, f.element(f.mul_idx(s.index(), x.coord_idx(i))));
  return r;
}

Octonion conj(const Octonion& x) {
  const Field& f = x.field();
  Octonion r(f);
  for (unsigned i = 0; i < 8; ++i)
    r.set_coord(i, f.element(f.neg_idx(x.coord_idx(i))));
  r.set_coord(kE0, f.element(x.coord_idx(kEm0)));
  r.set_coord(kEm0, f.element(x.coord_idx(kE0)));
  return r;
}

FieldElement norm(const Octonion& x) {
  const Field& f = x.field();
  unsigned n = f.mul_idx(x.coord_idx(kEm1), x.coord_idx(kE1));
  n = f.add_idx(n, f.mul_idx(x.coord_idx(kEwb), x.coord_idx(kEmwb)));
  n = f.add_idx(n, f.mul_idx(x.coord_idx(kEw), x.coord_idx(kEmw)));
  n = f.add_idx(n, f.mul_idx(x.coord_idx(kE0), x.coord_idx(kEm0)));
  return f.element(n);
}

FieldElement trace(const Octonion& x) {
  const Field& f = x.field();
  return f.element(f.add_idx(x.coord_idx(kE0), x.coord_idx(kEm0)));
}

FieldElement polar(const Octonion& x, const Octonion& y) {
  return norm(x + y) - norm(x) - norm(y);
}

Octonion inverse(const Octonion& x) {
  FieldElement n = norm(x);
  if (n.is_zero()) throw std::domain_error("isotropic octonion has no inverse");
  return n.inv() * conj(x);
}

FieldElement as_scalar(const Octonion& x) {
  const Field& f = x.field();
  unsigned mu = x.coord_idx(kE0);
  for (unsigned i = 0; i < 8; ++i) {
    unsigned want = (i == kE0 || i == kEm0) ? mu : 0u;
    if (x.coord_idx(i) != want) throw std::domain_error("octonion is not a scalar multiple of 1");
  }
  return f.element(mu);
}

void left_mul_matrix(const Octonion& a, FMatrix& out) {
  const Field& f = a.field();
  for (unsigned j = 0; j < 8; ++j) {
    Octonion img = a * Octonion::basis(f, j);
    for (unsigned k = 0; k < 8; ++k) out.set_idx(j, k, img.coord_idx(k));
  }
}

void right_mul_matrix(const Octonion& a, FMatrix& out) {
  const Field& f = a.field();
  for (unsigned j = 0; j < 8; ++j) {
    Octonion img = Octonion::basis(f, j) * a;
    for (unsigned k = 0; k < 8; ++k) out.set_idx(j, k, img.coord_idx(k));
  }
}

AnnihilatorBases annihilators(const Octonion& x) {
  if (x.is_zero()) throw std::domain_error("annihilators of the zero octonion are not defined");
  if (!norm(x).is_zero()) throw std::domain_error("octonion is invertible; annihilators are trivial");
  const Field& f = x.field();
  Octonion xb = conj(x);

  // {y : xb y = 0}: coordinates of xb*y are linear in y; column-vector kernel.
  FMatrix lm(f, 8, 8), rm(f, 8, 8);
  left_mul_matrix(xb, lm);
  right_mul_matrix(xb, rm);
  // left_mul_matrix rows are images of basis vectors; the map y -> xb*y has
  // matrix entries M[k][j] = coeff of e_k in xb*e_j, i.e. the transpose.
  auto to_octs = [&f](const std::vector<std::vector<uint8_t>>& rows) {
    std::vector<Octonion> out;
    for (const auto& r : rows) {
      Octonion y(f);
      for (unsigned i = 0; i < 8; ++i) y.set_coord(i, f.element(r[i]));
      out.push_back(y);
    }
    return out;
  };
  AnnihilatorBases b;
  b.left = to_octs(lm.transpose().kernel_basis());
  b.right = to_octs(rm.transpose().kernel_basis());
  return b;
}

bool is_sociable_pair(const Octonion& x, const Octonion& y, unsigned trials, uint64_t seed) {
  const Field& f = x.field();
  Octonion xy = x * y;
  for (unsigned i = 0; i < 8; ++i) {
    Octonion z = Octonion::basis(f, i);
    if (xy * z != x * (y * z)) return false;
  }
  for (unsigned t = 0; t < trials; ++t) {
    SampleRng rng(seed, t);
    Octonion z(f);
    for (unsigned i = 0; i < 8; ++i) z.set_coord(i, f.element(rng.below(f.q())));
    if (xy * z != x * (y * z)) return false;
  }
  return true;
}

namespace {

// Subscript arithmetic on +-{0,1,w,wb}: s in {+1,-1}, t in {0,1,2,3} for
// {0,1,w,wb}.  Multiplying subscripts by w fixes 0, cycles 1 -> w -> wb -> 1.
struct Sub {
  int s;
  int t;
};

unsigned idx_of(Sub a) {
  static constexpr int tbl[2][4] = {{kE0, kE1, kEw, kEwb}, {kEm0, kEm1, kEmw, kEmwb}};
  return static_cast<unsigned>(tbl[a.s < 0 ? 1 : 0][a.t]);
}
Sub neg(Sub a) { return {-a.s, a.t}; }
Sub mulw(Sub a) {
  static constexpr int nxt[4] = {0, 2, 3, 1};  // 0->0, 1->w, w->wb, wb->1
  return {a.s, nxt[a.t]};
}

}  // namespace

int rule_generated_entry(unsigned i, unsigned j) {
  struct Rule {
    Sub a, b, c;
    int sign;
  };
  const Sub s1{+1, 1}, sw{+1, 2}, s0{+1, 0}, sm0{-1, 0}, sm1{-1, 1}, smwb{-1, 3};
  const Rule base[] = {
      {s1, sw, smwb, +1}, {sw, s1, smwb, -1},  // e1 ew = -ew e1 = e-wb
      {s1, s0, s1, +1},   {sm0, s1, s1, -1},   // e1 e0 = -e-0 e1 = e1
      {sm1, s1, s0, -1},  {s0, s0, s0, +1},    // e-1 e1 = -e0, e0 e0 = e0
  };
  for (const Rule& r : base) {
    Sub a = r.a, b = r.b, c = r.c;
    for (int f = 0; f < 6; ++f) {
      Sub aa = a, bb = b, cc = c;
      for (int m = 0; m < f % 3; ++m) {
        aa = mulw(aa);
        bb = mulw(bb);
        cc = mulw(cc);
      }
      if (f >= 3) {
        aa = neg(aa);
        bb = neg(bb);
        cc = neg(cc);
      }
      if (idx_of(aa) == i && idx_of(bb) == j)
        return r.sign * (static_cast<int>(idx_of(cc)) + 1);
    }
  }
  return 0;
}

}  // namespace e6
