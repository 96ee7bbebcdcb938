#pragma once

#include <array>
#include <cstdint>

namespace e6 {

class AlbertVector;
class AlbertMap;
class Field;

/// Bit-packed kernels for the q = 2 case.  An octonion is one byte (bit i =
/// coordinate i in the fixed basis order), an Albert vector is 27 bits
/// (a, b, c, A[8], B[8], C[8]), and a linear map is 27 row masks.
namespace gf2 {

struct Tables {
  std::array<uint8_t, 256 * 256> mul;  // mul[(x << 8) | y]
  uint8_t conj[256];
  uint8_t norm[256];   // 0/1
  uint8_t trace[256];  // 0/1
};
const Tables& tables();

inline uint8_t mul(uint8_t x, uint8_t y) { return tables().mul[(unsigned(x) << 8) | y]; }
inline uint8_t conj8(uint8_t x) { return tables().conj[x]; }
inline unsigned norm8(uint8_t x) { return tables().norm[x]; }
inline unsigned trace8(uint8_t x) { return tables().trace[x]; }

constexpr uint32_t kA = 1u << 0;
constexpr uint32_t kB = 1u << 1;
constexpr uint32_t kC = 1u << 2;

inline unsigned get_a(uint32_t v) { return v & 1u; }
inline unsigned get_b(uint32_t v) { return (v >> 1) & 1u; }
inline unsigned get_c(uint32_t v) { return (v >> 2) & 1u; }
inline uint8_t get_A(uint32_t v) { return static_cast<uint8_t>((v >> 3) & 0xFF); }
inline uint8_t get_B(uint32_t v) { return static_cast<uint8_t>((v >> 11) & 0xFF); }
inline uint8_t get_C(uint32_t v) { return static_cast<uint8_t>((v >> 19) & 0xFF); }
inline uint32_t pack(unsigned a, unsigned b, unsigned c, uint8_t A, uint8_t B, uint8_t C) {
  return (a & 1u) | ((b & 1u) << 1) | ((c & 1u) << 2) | (uint32_t(A) << 3) | (uint32_t(B) << 11) |
         (uint32_t(C) << 19);
}

/// Dickson-Freudenthal determinant of a packed vector.
inline unsigned delta(uint32_t v) {
  unsigned a = get_a(v), b = get_b(v), c = get_c(v);
  uint8_t A = get_A(v), B = get_B(v), C = get_C(v);
  unsigned d = a & b & c;
  d ^= a & norm8(A);
  d ^= b & norm8(B);
  d ^= c & norm8(C);
  d ^= trace8(mul(A, mul(B, C)));
  return d;
}

/// The six whiteness conditions, with early exit.
inline bool is_white(uint32_t v) {
  if (v == 0) return false;
  unsigned a = get_a(v), b = get_b(v), c = get_c(v);
  uint8_t A = get_A(v), B = get_B(v), C = get_C(v);
  if (norm8(A) != (b & c)) return false;
  if (norm8(B) != (c & a)) return false;
  if (norm8(C) != (a & b)) return false;
  if (mul(A, B) != (c ? conj8(C) : 0)) return false;
  if (mul(B, C) != (a ? conj8(A) : 0)) return false;
  if (mul(C, A) != (b ? conj8(B) : 0)) return false;
  return true;
}

/// Independent whiteness route: all 27 values of the mixed form against the
/// standard basis vectors, each evaluated from the defining formula.
bool is_white_by_functionals(uint32_t v);

struct Map {
  std::array<uint32_t, 27> rows;
  uint32_t apply(uint32_t v) const {
    uint32_t r = 0;
    while (v) {
      r ^= rows[static_cast<unsigned>(__builtin_ctz(v))];
      v &= v - 1;
    }
    return r;
  }
};

uint32_t pack_vector(const AlbertVector& x);
AlbertVector unpack_vector(const Field& f, uint32_t v);
Map pack_map(const AlbertMap& m);

}  // namespace gf2
}  // namespace e6
