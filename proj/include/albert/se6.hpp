#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "albert/albert.hpp"

namespace e6 {

/// The generator families acting on J.  Primed families are written p/pp.
enum class GenKind {
  M,
  Mp,
  Mpp,
  L,
  Lp,
  Lpp,
  Pu,
  Pup,
  Pupp,
  PScale,
  Delta,
  Tau,
};

const char* to_string(GenKind k);
bool kind_takes_param(GenKind k);

/// One generator: a kind plus its octonion parameter (absent for the two
/// coordinate permutations).  Pu/Pup/Pupp require a norm-one parameter;
/// PScale (the diag(1, u^{-1}, u) scaling family) an invertible one.
class GeneratorSpec {
 public:
  GeneratorSpec(GenKind kind, const Octonion& param);
  explicit GeneratorSpec(GenKind kind);  // Delta or Tau

  GenKind kind() const { return kind_; }
  const Octonion& param() const;
  bool has_param() const { return param_.has_value(); }

 private:
  GenKind kind_;
  std::optional<Octonion> param_;
};

using GeneratorWord = std::vector<GeneratorSpec>;

/// Invertible linear endomorphism of J as a 27x27 matrix acting on row
/// vectors; row i is the image of basis vector i.
class AlbertMap {
 public:
  explicit AlbertMap(const Field& f);  // identity
  static AlbertMap identity(const Field& f) { return AlbertMap(f); }

  const Field& field() const { return *field_; }
  unsigned idx(unsigned i, unsigned j) const { return m_[i * 27 + j]; }
  void set_idx(unsigned i, unsigned j, unsigned v) { m_[i * 27 + j] = static_cast<uint8_t>(v); }
  FieldElement at(unsigned i, unsigned j) const { return field_->element(idx(i, j)); }

  AlbertVector apply(const AlbertVector& x) const;
  bool operator==(const AlbertMap& o) const { return m_ == o.m_ && field_->same_spec(*o.field_); }
  bool operator!=(const AlbertMap& o) const { return !(*this == o); }

 private:
  const Field* field_;
  std::vector<uint8_t> m_;
};

/// Closed-form action of one generator on one vector.
AlbertVector apply_generator(const GeneratorSpec& g, const AlbertVector& x);

/// Matrix of the generator's action (rows = images of basis vectors).
AlbertMap generator_matrix(const Field& f, const GeneratorSpec& g);

/// Matrix product; composition applies f first, then g.
AlbertMap compose(const AlbertMap& f, const AlbertMap& g);

/// Exact inverse by Gaussian elimination; throws std::domain_error if
/// singular (cannot happen for generator words).
AlbertMap invert(const AlbertMap& f);

/// Left-to-right product of the word's generator actions.
AlbertMap word_to_map(const Field& f, const GeneratorWord& w);

enum class DeltaCheckMode { Exhaustive, Sampled };

/// Checks delta(x f) = delta(x), either over all q^27 vectors (q = 2 only;
/// larger fields exceed the exhaustive budget) or over `samples` seeded
/// random vectors.
bool preserves_delta(const AlbertMap& f, DeltaCheckMode mode, uint64_t samples = 0,
                     uint64_t seed = 0, unsigned threads = 0);

/// The six commutator identities expressing each translation family as a
/// commutator of two others, checked as matrix identities for this x.
bool commutator_identities_check(const Octonion& x);

/// Compares the C-coordinate action of Pu (C -> conj(u) C conj(u)) with the
/// product of the hyperplane reflections in u and in 1 (applied in that
/// order), for a norm-one u.
bool q8_reflection_check(const Octonion& u);

}  // namespace e6
