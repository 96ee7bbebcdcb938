#include "albert/se6.hpp"

#include <atomic>
#include <stdexcept>

#include "albert/gf2.hpp"
#include "albert/linalg.hpp"
#include "albert/ortho.hpp"
#include "albert/parallel.hpp"
#include "albert/rng.hpp"

namespace e6 {

const char* to_string(GenKind k) {
  switch (k) {
    case GenKind::M: return "M";
    case GenKind::Mp: return "Mp";
    case GenKind::Mpp: return "Mpp";
    case GenKind::L: return "L";
    case GenKind::Lp: return "Lp";
    case GenKind::Lpp: return "Lpp";
    case GenKind::Pu: return "Pu";
    case GenKind::Pup: return "Pup";
    case GenKind::Pupp: return "Pupp";
    case GenKind::PScale: return "Pscale";
    case GenKind::Delta: return "delta";
    case GenKind::Tau: return "tau";
  }
  return "?";
}

bool kind_takes_param(GenKind k) { return k != GenKind::Delta && k != GenKind::Tau; }

GeneratorSpec::GeneratorSpec(GenKind kind, const Octonion& param) : kind_(kind), param_(param) {
  if (!kind_takes_param(kind)) throw std::invalid_argument("generator takes no parameter");
  switch (kind) {
    case GenKind::Pu:
    case GenKind::Pup:
    case GenKind::Pupp:
      if (norm(param) != param.field().one())
        throw std::invalid_argument("P-family generators need a norm-one parameter");
      break;
    case GenKind::PScale:
      if (norm(param).is_zero())
        throw std::invalid_argument("scaling generators need an invertible parameter");
      break;
    default:
      break;
  }
}

GeneratorSpec::GeneratorSpec(GenKind kind) : kind_(kind) {
  if (kind_takes_param(kind)) throw std::invalid_argument("generator needs a parameter");
}

const Octonion& GeneratorSpec::param() const {
  if (!param_) throw std::logic_error("generator has no parameter");
  return *param_;
}

AlbertMap::AlbertMap(const Field& f) : field_(&f), m_(27 * 27, 0) {
  for (unsigned i = 0; i < 27; ++i) m_[i * 27 + i] = 1;
}

AlbertVector AlbertMap::apply(const AlbertVector& x) const {
  require_same_field(*field_, x.field());
  const Field& f = *field_;
  AlbertVector r(f);
  for (unsigned i = 0; i < 27; ++i) {
    unsigned xi = x.coord_idx(i);
    if (xi == 0) continue;
    for (unsigned j = 0; j < 27; ++j) {
      unsigned t = f.mul_idx(xi, idx(i, j));
      if (t) r.set_coord(j, f.element(f.add_idx(r.coord_idx(j), t)));
    }
  }
  return r;
}

// The translation actions below are the expansions of X -> conj(M)^T X M
// for the corresponding unitriangular 3x3 matrix M over <1, x>; the primed
// and doubly primed forms are the tau-conjugates of the unprimed ones
// (mat(Mp) = T^2 mat(M) T, mat(Mpp) = T mat(M) T^2, and likewise for L,
// with mat(L) = D mat(M) D), which the tests verify as matrix identities.
AlbertVector apply_generator(const GeneratorSpec& g, const AlbertVector& x) {
  const Field& fld = x.field();
  FieldElement a = x.a(), b = x.b(), c = x.c();
  Octonion A = x.A(), B = x.B(), C = x.C();
  switch (g.kind()) {
    case GenKind::Delta:
      return AlbertVector(b, a, c, conj(B), conj(A), conj(C));
    case GenKind::Tau:
      return AlbertVector(c, a, b, C, A, B);
    case GenKind::M: {
      const Octonion& p = g.param();
      require_same_field(fld, p.field());
      Octonion pb = conj(p);
      return AlbertVector(a, b + a * norm(p) + trace(pb * C), c, A + pb * conj(B), B,
                          C + a * p);
    }
    case GenKind::Mp: {
      const Octonion& p = g.param();
      require_same_field(fld, p.field());
      Octonion pb = conj(p);
      return AlbertVector(a, b, c + b * norm(p) + trace(pb * A), A + b * p,
                          B + pb * conj(C), C);
    }
    case GenKind::Mpp: {
      const Octonion& p = g.param();
      require_same_field(fld, p.field());
      Octonion pb = conj(p);
      return AlbertVector(a + c * norm(p) + trace(conj(B) * p), b, c, A, B + c * p,
                          C + pb * conj(A));
    }
    case GenKind::L: {
      const Octonion& p = g.param();
      require_same_field(fld, p.field());
      return AlbertVector(a + b * norm(p) + trace(C * p), b, c, A, B + conj(A) * p,
                          C + b * conj(p));
    }
    case GenKind::Lp: {
      const Octonion& p = g.param();
      require_same_field(fld, p.field());
      return AlbertVector(a, b + c * norm(p) + trace(A * p), c, A + c * conj(p), B,
                          C + conj(B) * p);
    }
    case GenKind::Lpp: {
      const Octonion& p = g.param();
      require_same_field(fld, p.field());
      return AlbertVector(a, b, c + a * norm(p) + trace(B * p), A + conj(C) * p,
                          B + a * conj(p), C);
    }
    case GenKind::Pu: {
      const Octonion& u = g.param();
      require_same_field(fld, u.field());
      Octonion ub = conj(u);
      return AlbertVector(a, b, c, u * A, B * u, (ub * C) * ub);
    }
    case GenKind::Pup: {
      const Octonion& u = g.param();
      require_same_field(fld, u.field());
      Octonion ub = conj(u);
      return AlbertVector(a, b, c, (ub * A) * ub, u * B, C * u);
    }
    case GenKind::Pupp: {
      const Octonion& u = g.param();
      require_same_field(fld, u.field());
      Octonion ub = conj(u);
      return AlbertVector(a, b, c, A * u, (ub * B) * ub, u * C);
    }
    case GenKind::PScale: {
      // diag(1, u^{-1}, u): scales b by N(u)^{-1}, c by N(u).
      const Octonion& u = g.param();
      require_same_field(fld, u.field());
      FieldElement n = norm(u);
      FieldElement ni = n.inv();
      Octonion ub = conj(u);
      return AlbertVector(a, ni * b, n * c, ni * (u * (A * u)), ub * B, ni * (C * ub));
    }
  }
  throw std::logic_error("unhandled generator kind");
}

AlbertMap generator_matrix(const Field& f, const GeneratorSpec& g) {
  AlbertMap m(f);
  for (unsigned i = 0; i < 27; ++i) {
    AlbertVector img = apply_generator(g, AlbertVector::basis(f, i));
    for (unsigned j = 0; j < 27; ++j) m.set_idx(i, j, img.coord_idx(j));
  }
  return m;
}

AlbertMap compose(const AlbertMap& f, const AlbertMap& g) {
  require_same_field(f.field(), g.field());
  const Field& fld = f.field();
  AlbertMap r(fld);
  for (unsigned i = 0; i < 27; ++i)
    for (unsigned j = 0; j < 27; ++j) r.set_idx(i, j, 0);
  for (unsigned i = 0; i < 27; ++i)
    for (unsigned k = 0; k < 27; ++k) {
      unsigned fik = f.idx(i, k);
      if (fik == 0) continue;
      for (unsigned j = 0; j < 27; ++j) {
        unsigned t = fld.mul_idx(fik, g.idx(k, j));
        if (t) r.set_idx(i, j, fld.add_idx(r.idx(i, j), t));
      }
    }
  return r;
}

AlbertMap invert(const AlbertMap& f) {
  const Field& fld = f.field();
  FMatrix m(fld, 27, 27);
  for (unsigned i = 0; i < 27; ++i)
    for (unsigned j = 0; j < 27; ++j) m.set_idx(i, j, f.idx(i, j));
  FMatrix inv = m.inverse();
  AlbertMap r(fld);
  for (unsigned i = 0; i < 27; ++i)
    for (unsigned j = 0; j < 27; ++j) r.set_idx(i, j, inv.idx(i, j));
  return r;
}

AlbertMap word_to_map(const Field& f, const GeneratorWord& w) {
  // Fold by applying each action to the rows of the accumulated matrix;
  // equivalent to the matrix product, linear actions throughout.
  AlbertMap acc(f);
  for (const GeneratorSpec& g : w) {
    AlbertMap next(f);
    for (unsigned i = 0; i < 27; ++i) {
      AlbertVector row(f);
      for (unsigned j = 0; j < 27; ++j) row.set_coord(j, acc.at(i, j));
      AlbertVector img = apply_generator(g, row);
      for (unsigned j = 0; j < 27; ++j) next.set_idx(i, j, img.coord_idx(j));
    }
    acc = next;
  }
  return acc;
}

bool preserves_delta(const AlbertMap& f, DeltaCheckMode mode, uint64_t samples, uint64_t seed,
                     unsigned threads) {
  const Field& fld = f.field();
  if (mode == DeltaCheckMode::Exhaustive) {
    if (fld.q() != 2)
      throw std::invalid_argument("exhaustive delta check exceeds the budget for q > 2");
    gf2::Map m = gf2::pack_map(f);
    std::atomic<bool> ok{true};
    unsigned nthreads = resolve_threads(threads);
    parallel_chunks(1u << 27, nthreads, [&](uint64_t b, uint64_t e, unsigned) {
      for (uint64_t v = b; v < e && ok.load(std::memory_order_relaxed); ++v) {
        uint32_t x = static_cast<uint32_t>(v);
        if (gf2::delta(m.apply(x)) != gf2::delta(x)) ok.store(false, std::memory_order_relaxed);
      }
    });
    return ok.load();
  }
  for (uint64_t i = 0; i < samples; ++i) {
    SampleRng rng(seed, i);
    AlbertVector x(fld);
    for (unsigned j = 0; j < 27; ++j) x.set_coord(j, fld.element(rng.below(fld.q())));
    if (delta(f.apply(x)) != delta(x)) return false;
  }
  return true;
}

bool commutator_identities_check(const Octonion& x) {
  const Field& f = x.field();
  Octonion one = Octonion::one(f);
  Octonion mone = -one;
  Octonion mx = -x;
  // Q_y^{-1} = Q_{-y} for every translation family, by additivity.
  struct Identity {
    GeneratorWord word;
    GeneratorSpec target;
  };
  auto G = [](GenKind k, const Octonion& p) { return GeneratorSpec(k, p); };
  const Identity ids[] = {
      {{G(GenKind::Lpp, one), G(GenKind::Lp, x), G(GenKind::Lpp, mone), G(GenKind::Lp, mx)},
       G(GenKind::M, x)},
      {{G(GenKind::L, one), G(GenKind::Lpp, x), G(GenKind::L, mone), G(GenKind::Lpp, mx)},
       G(GenKind::Mp, x)},
      {{G(GenKind::Lp, one), G(GenKind::L, x), G(GenKind::Lp, mone), G(GenKind::L, mx)},
       G(GenKind::Mpp, x)},
      {{G(GenKind::Mp, one), G(GenKind::Mpp, x), G(GenKind::Mp, mone), G(GenKind::Mpp, mx)},
       G(GenKind::L, x)},
      {{G(GenKind::Mpp, one), G(GenKind::M, x), G(GenKind::Mpp, mone), G(GenKind::M, mx)},
       G(GenKind::Lp, x)},
      {{G(GenKind::M, one), G(GenKind::Mp, x), G(GenKind::M, mone), G(GenKind::Mp, mx)},
       G(GenKind::Lpp, x)},
  };
  for (const Identity& id : ids)
    if (word_to_map(f, id.word) != generator_matrix(f, id.target)) return false;
  return true;
}

bool q8_reflection_check(const Octonion& u) {
  const Field& f = u.field();
  if (norm(u) != f.one()) throw std::invalid_argument("reflection check needs a norm-one u");
  QuadSpace oct = octonion_quad_space(f);
  OrthoElement ru = reflection(oct, octonion_coords(u));
  OrthoElement r1 = reflection(oct, octonion_coords(Octonion::one(f)));
  Octonion ub = conj(u);
  for (unsigned i = 0; i < 8; ++i) {
    Octonion c = Octonion::basis(f, i);
    Octonion lhs = (ub * c) * ub;
    std::vector<uint8_t> v = octonion_coords(c);
    v = ru.matrix().apply_row(v);
    v = r1.matrix().apply_row(v);
    for (unsigned j = 0; j < 8; ++j)
      if (lhs.coord_idx(j) != v[j]) return false;
  }
  return true;
}

}  // namespace e6
