#pragma once

#include "albert/albert.hpp"
#include "albert/rng.hpp"

namespace e6 {

inline Octonion random_octonion(const Field& f, SampleRng& rng) {
  Octonion x(f);
  for (unsigned i = 0; i < 8; ++i) x.set_coord(i, f.element(rng.below(f.q())));
  return x;
}

inline AlbertVector random_vector(const Field& f, SampleRng& rng) {
  AlbertVector x(f);
  for (unsigned i = 0; i < AlbertVector::kDim; ++i) x.set_coord(i, f.element(rng.below(f.q())));
  return x;
}

inline AlbertVector random_nonzero_vector(const Field& f, SampleRng& rng) {
  for (;;) {
    AlbertVector x = random_vector(f, rng);
    if (!x.is_zero()) return x;
  }
}

inline Octonion random_norm_one(const Field& f, SampleRng& rng) {
  for (;;) {
    Octonion u = random_octonion(f, rng);
    if (norm(u) == f.one()) return u;
  }
}

inline Octonion random_invertible(const Field& f, SampleRng& rng) {
  for (;;) {
    Octonion u = random_octonion(f, rng);
    if (!norm(u).is_zero()) return u;
  }
}

inline AlbertVector random_white_vector(const Field& f, SampleRng& rng) {
  for (;;) {
    AlbertVector x = random_vector(f, rng);
    if (!x.is_zero() && whiteness_conditions(x)) return x;
  }
}

}  // namespace e6
