#include "albert/gf2.hpp"

#include <memory>

#include "albert/albert.hpp"
#include "albert/se6.hpp"

namespace e6 {
namespace gf2 {

namespace {

std::unique_ptr<Tables> build_tables() {
  auto t = std::make_unique<Tables>();
  for (unsigned x = 0; x < 256; ++x) {
    for (unsigned y = 0; y < 256; ++y) {
      unsigned z = 0;
      for (unsigned i = 0; i < 8; ++i) {
        if (!((x >> i) & 1)) continue;
        for (unsigned j = 0; j < 8; ++j) {
          if (!((y >> j) & 1)) continue;
          int e = kOctMulTable[i][j];
          if (e) z ^= 1u << (static_cast<unsigned>(e > 0 ? e : -e) - 1);
        }
      }
      t->mul[(x << 8) | y] = static_cast<uint8_t>(z);
    }
    unsigned c = x & 0b11100111u;  // sign flips are trivial mod 2
    unsigned b3 = (x >> 3) & 1, b4 = (x >> 4) & 1;
    c |= (b4 << 3) | (b3 << 4);
    t->conj[x] = static_cast<uint8_t>(c);
    unsigned n = ((x >> 0) & (x >> 7)) ^ ((x >> 1) & (x >> 6)) ^ ((x >> 2) & (x >> 5)) ^
                 ((x >> 3) & (x >> 4));
    t->norm[x] = static_cast<uint8_t>(n & 1);
    t->trace[x] = static_cast<uint8_t>(((x >> 3) ^ (x >> 4)) & 1);
  }
  return t;
}

}  // namespace

const Tables& tables() {
  static const std::unique_ptr<Tables> t = build_tables();
  return *t;
}

bool is_white_by_functionals(uint32_t v) {
  if (v == 0) return false;
  unsigned a = get_a(v), b = get_b(v), c = get_c(v);
  uint8_t A = get_A(v), B = get_B(v), C = get_C(v);
  // Values of the mixed form against the three scalar basis vectors.
  if (((b & c) ^ norm8(A)) || ((a & c) ^ norm8(B)) || ((a & b) ^ norm8(C))) return false;
  // Against octonion basis vectors: a <A, e_j> + T(e_j (BC)) and cyclic.
  uint8_t BC = mul(B, C), CA = mul(C, A), AB = mul(A, B);
  for (unsigned j = 0; j < 8; ++j) {
    uint8_t ej = static_cast<uint8_t>(1u << j);
    unsigned pAD = trace8(mul(ej, conj8(A)));  // <A, e_j> = T(e_j conj(A))
    if (((a & pAD) ^ trace8(mul(ej, BC))) & 1) return false;
    unsigned pBE = trace8(mul(ej, conj8(B)));
    if (((b & pBE) ^ trace8(mul(ej, CA))) & 1) return false;
    unsigned pCF = trace8(mul(ej, conj8(C)));
    if (((c & pCF) ^ trace8(mul(ej, AB))) & 1) return false;
  }
  return true;
}

uint32_t pack_vector(const AlbertVector& x) {
  uint32_t v = 0;
  for (unsigned i = 0; i < AlbertVector::kDim; ++i)
    if (x.coord_idx(i)) v |= 1u << i;
  return v;
}

AlbertVector unpack_vector(const Field& f, uint32_t v) {
  AlbertVector x(f);
  for (unsigned i = 0; i < AlbertVector::kDim; ++i)
    if ((v >> i) & 1) x.set_coord(i, f.one());
  return x;
}

Map pack_map(const AlbertMap& m) {
  Map out;
  for (unsigned i = 0; i < 27; ++i) {
    uint32_t row = 0;
    for (unsigned j = 0; j < 27; ++j)
      if (m.idx(i, j)) row |= 1u << j;
    out.rows[i] = row;
  }
  return out;
}

}  // namespace gf2
}  // namespace e6
