#include <doctest.h>

#include "albert/gf2.hpp"
#include "albert/se6.hpp"
#include "albert/sampling.hpp"

using namespace e6;

namespace {

AlbertVector diag(const Field& f, long long a, long long b, long long c) {
  return AlbertVector(f.from_int(a), f.from_int(b), f.from_int(c), Octonion::zero(f),
                      Octonion::zero(f), Octonion::zero(f));
}

AlbertMap tau_mat(const Field& f) { return generator_matrix(f, GeneratorSpec(GenKind::Tau)); }

}  // namespace

TEST_CASE("parameter constraints") {
  Field f(3);
  CHECK_THROWS_AS(GeneratorSpec(GenKind::Pu, Octonion::basis(f, kE1)), std::invalid_argument);
  CHECK_THROWS_AS(GeneratorSpec(GenKind::PScale, Octonion::basis(f, kE1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(GeneratorSpec(GenKind::Tau, Octonion::one(f)), std::invalid_argument);
  CHECK_THROWS_AS(GeneratorSpec(GenKind::M), std::invalid_argument);
  CHECK_NOTHROW(GeneratorSpec(GenKind::Pu, Octonion::one(f)));
  CHECK_NOTHROW(GeneratorSpec(GenKind::PScale, f.from_int(2) * Octonion::one(f)));
}

TEST_CASE("printed actions on reference vectors") {
  Field f(5);
  SampleRng rng(3, 0);
  Octonion x = random_octonion(f, rng);
  AlbertVector img = apply_generator(GeneratorSpec(GenKind::M, x), diag(f, 1, 0, 0));
  CHECK(img.a() == f.one());
  CHECK(img.b() == norm(x));
  CHECK(img.c() == f.zero());
  CHECK(img.C() == x);
  CHECK(img.A().is_zero());
  CHECK(img.B().is_zero());

  CHECK(apply_generator(GeneratorSpec(GenKind::Delta), diag(f, 1, 0, 0)) == diag(f, 0, 1, 0));

  AlbertVector v = random_vector(f, rng);
  AlbertVector t3 = v;
  for (int i = 0; i < 3; ++i) t3 = apply_generator(GeneratorSpec(GenKind::Tau), t3);
  CHECK(t3 == v);

  Octonion u = random_norm_one(f, rng);
  AlbertVector d = diag(f, 2, 3, 4);
  CHECK(apply_generator(GeneratorSpec(GenKind::Pu, u), d) == d);
}

TEST_CASE("generator matrices") {
  Field f(5);
  AlbertMap d = generator_matrix(f, GeneratorSpec(GenKind::Delta));
  CHECK(compose(d, d) == AlbertMap::identity(f));
  AlbertMap t = tau_mat(f);
  CHECK(compose(compose(t, t), t) == AlbertMap::identity(f));
  CHECK(generator_matrix(f, GeneratorSpec(GenKind::M, Octonion::zero(f))) ==
        AlbertMap::identity(f));
}

TEST_CASE("matrix of M restricted to the 4-space (v1, v4, v3, v2)") {
  Field f(5);
  FieldElement lam = f.from_int(2);
  AlbertMap m = generator_matrix(f, GeneratorSpec(GenKind::M, lam * Octonion::basis(f, kEm1)));
  // coordinates: v1 = a (0), v4 = C e1 (19+7), v3 = C e-1 (19+0), v2 = b (1)
  const unsigned idx[4] = {0, 26, 19, 1};
  unsigned expect[4][4] = {{1, 0, 2, 0}, {0, 1, 0, 2}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  for (unsigned i = 0; i < 4; ++i)
    for (unsigned j = 0; j < 4; ++j) CHECK(m.idx(idx[i], idx[j]) == expect[i][j]);
}

TEST_CASE("matrix application matches the closed-form action") {
  for (unsigned q : {2u, 3u, 4u}) {
    Field f(q);
    for (GenKind k : {GenKind::M, GenKind::Mp, GenKind::Mpp, GenKind::L, GenKind::Lp,
                      GenKind::Lpp, GenKind::Pu, GenKind::Pup, GenKind::Pupp, GenKind::PScale,
                      GenKind::Delta, GenKind::Tau}) {
      SampleRng rng(q * 100ull + static_cast<uint64_t>(k), 0);
      GeneratorSpec g = [&] {
        if (!kind_takes_param(k)) return GeneratorSpec(k);
        if (k == GenKind::Pu || k == GenKind::Pup || k == GenKind::Pupp)
          return GeneratorSpec(k, random_norm_one(f, rng));
        if (k == GenKind::PScale) return GeneratorSpec(k, random_invertible(f, rng));
        return GeneratorSpec(k, random_octonion(f, rng));
      }();
      AlbertMap m = generator_matrix(f, g);
      for (int t = 0; t < 20; ++t) {
        AlbertVector x = random_vector(f, rng);
        CHECK(m.apply(x) == apply_generator(g, x));
      }
    }
  }
}

TEST_CASE("primed families are coordinate-permutation conjugates") {
  Field f(3);
  SampleRng rng(15, 0);
  Octonion x = random_octonion(f, rng);
  AlbertMap t = tau_mat(f);
  AlbertMap t2 = compose(t, t);
  AlbertMap d = generator_matrix(f, GeneratorSpec(GenKind::Delta));
  auto conj_t = [&](const AlbertMap& m) { return compose(compose(t2, m), t); };
  auto conj_t2 = [&](const AlbertMap& m) { return compose(compose(t, m), t2); };
  AlbertMap M = generator_matrix(f, GeneratorSpec(GenKind::M, x));
  AlbertMap L = generator_matrix(f, GeneratorSpec(GenKind::L, x));
  CHECK(generator_matrix(f, GeneratorSpec(GenKind::Mp, x)) == conj_t(M));
  CHECK(generator_matrix(f, GeneratorSpec(GenKind::Mpp, x)) == conj_t2(M));
  CHECK(generator_matrix(f, GeneratorSpec(GenKind::L, x)) == compose(compose(d, M), d));
  CHECK(generator_matrix(f, GeneratorSpec(GenKind::Lp, x)) == conj_t(L));
  CHECK(generator_matrix(f, GeneratorSpec(GenKind::Lpp, x)) == conj_t2(L));
  Octonion u = random_norm_one(f, rng);
  AlbertMap Pu = generator_matrix(f, GeneratorSpec(GenKind::Pu, u));
  CHECK(generator_matrix(f, GeneratorSpec(GenKind::Pup, u)) == conj_t(Pu));
  CHECK(generator_matrix(f, GeneratorSpec(GenKind::Pupp, u)) == conj_t2(Pu));
}

TEST_CASE("compose and invert") {
  Field f(5);
  AlbertMap t = tau_mat(f);
  CHECK(compose(t, invert(t)) == AlbertMap::identity(f));
  SampleRng rng(8, 0);
  Octonion x = random_octonion(f, rng);
  AlbertMap m = generator_matrix(f, GeneratorSpec(GenKind::Lpp, x));
  CHECK(invert(m) == generator_matrix(f, GeneratorSpec(GenKind::Lpp, -x)));
}

TEST_CASE("scaling factorization of Pu") {
  for (unsigned q : {2u, 3u, 5u}) {
    Field f(q);
    for (int t = 0; t < 25; ++t) {
      SampleRng rng(q * 1234ull, t);
      Octonion u = random_norm_one(f, rng);
      Octonion one = Octonion::one(f);
      GeneratorWord w{GeneratorSpec(GenKind::M, u - one), GeneratorSpec(GenKind::L, one),
                      GeneratorSpec(GenKind::M, inverse(u) - one),
                      GeneratorSpec(GenKind::L, -u)};
      CHECK(word_to_map(f, w) == generator_matrix(f, GeneratorSpec(GenKind::Pu, u)));
      GeneratorWord triple{GeneratorSpec(GenKind::Pu, u), GeneratorSpec(GenKind::Pup, u),
                           GeneratorSpec(GenKind::Pupp, u)};
      CHECK(word_to_map(f, triple) == AlbertMap::identity(f));
    }
  }
}

TEST_CASE("determinant preservation") {
  Field f2(2), f5(5);
  CHECK(preserves_delta(AlbertMap::identity(f5), DeltaCheckMode::Sampled, 200, 1));
  // doubling is not an isometry of the cubic form
  AlbertMap twice(f5);
  for (unsigned i = 0; i < 27; ++i) twice.set_idx(i, i, 2);
  CHECK_FALSE(preserves_delta(twice, DeltaCheckMode::Sampled, 200, 1));
  // exhaustive run over GF(2) for one translation
  AlbertMap m = generator_matrix(f2, GeneratorSpec(GenKind::M, Octonion::basis(f2, kE1)));
  CHECK(preserves_delta(m, DeltaCheckMode::Exhaustive));
  CHECK_THROWS_AS(preserves_delta(AlbertMap::identity(f5), DeltaCheckMode::Exhaustive),
                  std::invalid_argument);
  // sampled over larger fields for every kind
  for (unsigned q : {3u, 4u, 5u}) {
    Field f(q);
    SampleRng rng(q, 99);
    for (GenKind k : {GenKind::M, GenKind::Mp, GenKind::Mpp, GenKind::L, GenKind::Lp,
                      GenKind::Lpp, GenKind::Pu, GenKind::Pup, GenKind::Pupp, GenKind::PScale,
                      GenKind::Delta, GenKind::Tau}) {
      GeneratorSpec g = [&] {
        if (!kind_takes_param(k)) return GeneratorSpec(k);
        if (k == GenKind::Pu || k == GenKind::Pup || k == GenKind::Pupp)
          return GeneratorSpec(k, random_norm_one(f, rng));
        if (k == GenKind::PScale) return GeneratorSpec(k, random_invertible(f, rng));
        return GeneratorSpec(k, random_octonion(f, rng));
      }();
      CHECK(preserves_delta(generator_matrix(f, g), DeltaCheckMode::Sampled, 2000,
                            q * 7ull + static_cast<uint64_t>(k)));
    }
  }
}

TEST_CASE("commutator identities") {
  Field f3(3), f2(2);
  CHECK(commutator_identities_check(Octonion::basis(f3, kE1)));
  CHECK(commutator_identities_check(Octonion::zero(f3)));
  for (int t = 0; t < 30; ++t) {
    SampleRng rng(55, t);
    CHECK(commutator_identities_check(random_octonion(f3, rng)));
    CHECK(commutator_identities_check(random_octonion(f2, rng)));
  }
}

TEST_CASE("reflection decomposition of the Pu action on the C coordinate") {
  Field f3(3), f5(5);
  CHECK(q8_reflection_check(Octonion::one(f3)));
  CHECK(q8_reflection_check(Octonion::basis(f3, kEm1) + Octonion::basis(f3, kE1)));
  for (int t = 0; t < 100; ++t) {
    SampleRng rng(66, t);
    CHECK(q8_reflection_check(random_norm_one(f3, rng)));
    CHECK(q8_reflection_check(random_norm_one(f5, rng)));
  }
  CHECK_THROWS_AS(q8_reflection_check(Octonion::basis(f3, kE1)), std::invalid_argument);
}

TEST_CASE("translation additivity and commutation") {
  for (unsigned q : {2u, 3u, 5u}) {
    Field f(q);
    bool ok = true;
    for (int t = 0; t < 400; ++t) {
      SampleRng rng(q * 3ull, t);
      Octonion x = random_octonion(f, rng), y = random_octonion(f, rng);
      AlbertMap lx = generator_matrix(f, GeneratorSpec(GenKind::Lpp, x));
      AlbertMap ly = generator_matrix(f, GeneratorSpec(GenKind::Lpp, y));
      ok = ok && compose(lx, ly) == generator_matrix(f, GeneratorSpec(GenKind::Lpp, x + y));
      AlbertMap mx = generator_matrix(f, GeneratorSpec(GenKind::Mp, x));
      AlbertMap my = generator_matrix(f, GeneratorSpec(GenKind::Mp, y));
      ok = ok && compose(mx, my) == generator_matrix(f, GeneratorSpec(GenKind::Mp, x + y));
      ok = ok && compose(mx, ly) == compose(ly, mx);
    }
    CHECK(ok);
  }
}

TEST_CASE("the white vector (0,0,1|000) is fixed by its stabiliser generators") {
  Field f2(2), f5(5);
  AlbertVector w2 = diag(f2, 0, 0, 1), w5 = diag(f5, 0, 0, 1);
  for (unsigned v = 0; v < 256; ++v) {
    Octonion x(f2);
    for (unsigned i = 0; i < 8; ++i)
      if ((v >> i) & 1) x.set_coord(i, f2.one());
    for (GenKind k : {GenKind::M, GenKind::L, GenKind::Mp, GenKind::Lpp})
      CHECK(apply_generator(GeneratorSpec(k, x), w2) == w2);
  }
  for (int t = 0; t < 100; ++t) {
    SampleRng rng(77, t);
    Octonion x = random_octonion(f5, rng);
    for (GenKind k : {GenKind::M, GenKind::L, GenKind::Mp, GenKind::Lpp})
      CHECK(apply_generator(GeneratorSpec(k, x), w5) == w5);
  }
}

TEST_CASE("scaling elements act on the white vector by the parameter norm") {
  Field f(5);
  AlbertVector w = diag(f, 0, 0, 1);
  for (int t = 0; t < 100; ++t) {
    SampleRng rng(88, t);
    Octonion u = random_invertible(f, rng);
    AlbertVector img = apply_generator(GeneratorSpec(GenKind::PScale, u), w);
    CHECK(img.a() == f.zero());
    CHECK(img.b() == f.zero());
    CHECK(img.c() == norm(u));
    CHECK(preserves_delta(generator_matrix(f, GeneratorSpec(GenKind::PScale, u)),
                          DeltaCheckMode::Sampled, 300, 88 + t));
  }
}

TEST_CASE("Pu preserves the norm form on the C coordinate") {
  Field f(5);
  for (int t = 0; t < 200; ++t) {
    SampleRng rng(99, t);
    Octonion u = random_norm_one(f, rng);
    Octonion c = random_octonion(f, rng);
    Octonion img = (conj(u) * c) * conj(u);
    CHECK(norm(img) == norm(c));
  }
}

TEST_CASE("Pu at parameter -1") {
  Field f2(2);
  CHECK(generator_matrix(f2, GeneratorSpec(GenKind::Pu, Octonion::one(f2))) ==
        AlbertMap::identity(f2));
  Field f3(3);
  Octonion mone = -Octonion::one(f3);
  AlbertMap p = generator_matrix(f3, GeneratorSpec(GenKind::Pu, mone));
  CHECK(p != AlbertMap::identity(f3));
  CHECK(compose(p, p) == AlbertMap::identity(f3));
  // trivial on the 10-space (a, b, C), negation on the 16-space (A, B)
  for (unsigned i = 0; i < 27; ++i) {
    bool in10 = (kMaskJ10abC >> i) & 1;
    bool inC = i == 2;
    for (unsigned j = 0; j < 27; ++j) {
      unsigned expect = 0;
      if (i == j) expect = (in10 || inC) ? 1 : f3.neg_idx(1);
      CHECK(p.idx(i, j) == expect);
    }
  }
}
