#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

#include "albert/se6.hpp"

namespace e6 {

using BigInt = boost::multiprecision::cpp_int;

/// (q^12 - 1)(q^9 - 1) / (q^4 - 1); the division is asserted exact.
/// q must be a prime power >= 2.
BigInt count_white_formula(unsigned long long q);

/// count_white_formula(q) / (q - 1), the number of 1-spaces.
BigInt count_white_points_formula(unsigned long long q);

struct WhiteStrata {
  BigInt in_j10;          // (q^5-1)(q^4+1)
  BigInt in_j26_not_j10;  // q^5 (q^8-1)(q^3+1)
  BigInt outside_j26;     // q^16 (q-1)
  BigInt total;
};

/// Stratified closed forms; total equals count_white_formula(q).
WhiteStrata count_white_stratified(unsigned long long q);

/// One pass over all 2^27 vectors of J over GF(2), counting white vectors
/// per stratum.
WhiteStrata enumerate_white_strata_gf2(unsigned threads = 0);

/// Brute-force white-vector count over all nonzero vectors.  q = 2 runs in
/// seconds; the literal q = 3 sweep visits 3^27 vectors and is refused
/// unless allow_slow (far beyond interactive time scales).
uint64_t count_white_enumerate(const Field& f, unsigned threads = 0, bool allow_slow = false);

/// White vectors supported on the given coordinate mask (enumerates
/// q^popcount(mask) vectors; intended for small subspaces).
uint64_t count_white_in_subspace(const Field& f, uint32_t mask);

/// q^36 (q^12-1)(q^9-1)(q^8-1)(q^6-1)(q^5-1)(q^2-1).
BigInt order_se6(unsigned long long q);
/// order_se6(q) / gcd(3, q-1).
BigInt order_e6(unsigned long long q);

/// Verifies order_se6(q) = count_white_points(q) * q^16 * S(q) * (q-1) with
/// S(q) = q^20 (q^8-1)(q^6-1)(q^5-1)(q^4-1)(q^2-1) recovered by exact
/// division.
bool stabilizer_order_consistency(unsigned long long q);

/// Scales a nonzero vector so its first nonzero coordinate is 1; two white
/// vectors get the same representative iff they span the same point.
AlbertVector normalize_point(const AlbertVector& x);

struct OrbitOptions {
  unsigned threads = 0;
  uint64_t max_points = 1u << 24;
  bool keep_points = false;
};

struct Orbit {
  uint64_t size = 0;
  std::vector<AlbertVector> points;  // normalized, sorted; filled if requested
};

/// Closure of the projective point <start> under the generator actions.
/// Throws std::runtime_error when the point budget is exceeded.
Orbit point_orbit(const AlbertVector& start, const std::vector<GeneratorSpec>& gens,
                  const OrbitOptions& opt = {});

/// Generator sets used by the orbit checks.
std::vector<GeneratorSpec> full_orbit_generators(const Field& f);        // M..Lpp, delta, tau
std::vector<GeneratorSpec> white_stabilizer_generators(const Field& f);  // M, L, Mp, Lpp, Pupp
std::vector<GeneratorSpec> j10_stabilizer_generators(const Field& f);    // M, Mpp, L, Lp, PScale

/// Canonical representative of a nonzero vector's orbit together with a
/// word mapping the input to it: (0,0,1|0,0,0) for white, (0,1,1|0,0,0)
/// for grey, (lambda,1,1|0,0,0) with lambda = delta(X) for black.
struct CanonicalForm {
  Color kind;
  FieldElement lambda;
  GeneratorWord word;
  AlbertVector representative;
};
CanonicalForm reduce_to_canonical(const AlbertVector& x);

}  // namespace e6
