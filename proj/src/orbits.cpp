#include "albert/orbits.hpp"

#include <algorithm>
#include <atomic>
#include <boost/multiprecision/cpp_int.hpp>
#include <mutex>
#include <stdexcept>
#include <unordered_set>

#include "albert/gf2.hpp"
#include "albert/parallel.hpp"

namespace e6 {

namespace {

BigInt pow_big(unsigned long long q, unsigned e) {
  BigInt r = 1;
  for (unsigned i = 0; i < e; ++i) r *= q;
  return r;
}

void require_prime_power(unsigned long long q) { factor_prime_power(q); }

BigInt exact_div(const BigInt& a, const BigInt& b) {
  if (b == 0 || a % b != 0) throw std::logic_error("division expected to be exact");
  return a / b;
}

}  // namespace

BigInt count_white_formula(unsigned long long q) {
  require_prime_power(q);
  return exact_div((pow_big(q, 12) - 1) * (pow_big(q, 9) - 1), pow_big(q, 4) - 1);
}

BigInt count_white_points_formula(unsigned long long q) {
  return exact_div(count_white_formula(q), BigInt(q) - 1);
}

WhiteStrata count_white_stratified(unsigned long long q) {
  require_prime_power(q);
  WhiteStrata s;
  s.in_j10 = (pow_big(q, 5) - 1) * (pow_big(q, 4) + 1);
  s.in_j26_not_j10 = pow_big(q, 5) * (pow_big(q, 8) - 1) * (pow_big(q, 3) + 1);
  s.outside_j26 = pow_big(q, 16) * (BigInt(q) - 1);
  s.total = s.in_j10 + s.in_j26_not_j10 + s.outside_j26;
  return s;
}

WhiteStrata enumerate_white_strata_gf2(unsigned threads) {
  unsigned nthreads = resolve_threads(threads);
  std::vector<std::array<uint64_t, 3>> counts(nthreads, {0, 0, 0});
  // One chunked sweep over the 2^27 packed vectors.
  parallel_chunks(1u << 27, nthreads, [&](uint64_t b, uint64_t e, unsigned tid) {
    auto& c = counts[tid];
    for (uint64_t v = b; v < e; ++v) {
      uint32_t x = static_cast<uint32_t>(v);
      if (!gf2::is_white(x)) continue;
      if (gf2::get_c(x)) {
        ++c[2];
      } else if (gf2::get_A(x) == 0 && gf2::get_B(x) == 0) {
        ++c[0];
      } else {
        ++c[1];
      }
    }
  });
  WhiteStrata s;
  uint64_t a = 0, b = 0, o = 0;
  for (auto& c : counts) {
    a += c[0];
    b += c[1];
    o += c[2];
  }
  s.in_j10 = a;
  s.in_j26_not_j10 = b;
  s.outside_j26 = o;
  s.total = BigInt(a) + b + o;
  return s;
}

uint64_t count_white_enumerate(const Field& f, unsigned threads, bool allow_slow) {
  if (f.q() == 2) {
    WhiteStrata s = enumerate_white_strata_gf2(threads);
    return static_cast<uint64_t>(s.total);
  }
  if (f.q() > 3 || (f.q() == 3 && !allow_slow))
    throw std::invalid_argument("exhaustive enumeration exceeds the budget for this field");
  // Generic odometer over all 27 coordinates.
  unsigned nthreads = resolve_threads(threads);
  const unsigned q = f.q();
  uint64_t outer = static_cast<uint64_t>(q) * q * q;  // coordinates 24..26
  std::vector<uint64_t> counts(nthreads, 0);
  parallel_chunks(outer, nthreads, [&](uint64_t bg, uint64_t en, unsigned tid) {
    AlbertVector x(f);
    for (uint64_t hi = bg; hi < en; ++hi) {
      uint64_t h = hi;
      for (unsigned c = 24; c < 27; ++c) {
        x.set_coord(c, f.element(h % q));
        h /= q;
      }
      uint64_t inner = 1;
      for (unsigned i = 0; i < 24; ++i) inner *= q;
      for (uint64_t lo = 0; lo < inner; ++lo) {
        uint64_t l = lo;
        for (unsigned c = 0; c < 24; ++c) {
          x.set_coord(c, f.element(l % q));
          l /= q;
        }
        if (!x.is_zero() && whiteness_conditions(x)) ++counts[tid];
      }
    }
  });
  uint64_t total = 0;
  for (uint64_t c : counts) total += c;
  return total;
}

uint64_t count_white_in_subspace(const Field& f, uint32_t mask) {
  std::vector<unsigned> coords;
  for (unsigned i = 0; i < 27; ++i)
    if (mask & (1u << i)) coords.push_back(i);
  double size = 1;
  for (size_t i = 0; i < coords.size(); ++i) size *= f.q();
  if (size > double(1u << 27)) throw std::invalid_argument("subspace enumeration exceeds budget");
  uint64_t n = 1;
  for (size_t i = 0; i < coords.size(); ++i) n *= f.q();
  uint64_t count = 0;
  AlbertVector x(f);
  for (uint64_t v = 1; v < n; ++v) {  // skip the zero vector
    uint64_t t = v;
    for (unsigned c : coords) {
      x.set_coord(c, f.element(t % f.q()));
      t /= f.q();
    }
    if (whiteness_conditions(x)) ++count;
  }
  return count;
}

BigInt order_se6(unsigned long long q) {
  require_prime_power(q);
  BigInt r = pow_big(q, 36);
  for (unsigned e : {12u, 9u, 8u, 6u, 5u, 2u}) r *= pow_big(q, e) - 1;
  return r;
}

BigInt order_e6(unsigned long long q) {
  unsigned g = (q % 3 == 1) ? 3 : 1;
  return exact_div(order_se6(q), BigInt(g));
}

bool stabilizer_order_consistency(unsigned long long q) {
  BigInt points = count_white_points_formula(q);
  BigInt spin = pow_big(q, 20);
  for (unsigned e : {8u, 6u, 5u, 4u, 2u}) spin *= pow_big(q, e) - 1;
  BigInt denom = points * pow_big(q, 16) * (BigInt(q) - 1);
  BigInt total = order_se6(q);
  if (denom == 0 || total % denom != 0) return false;
  return total / denom == spin;
}

AlbertVector normalize_point(const AlbertVector& x) {
  const Field& f = x.field();
  for (unsigned i = 0; i < AlbertVector::kDim; ++i) {
    unsigned v = x.coord_idx(i);
    if (v == 0) continue;
    if (v == 1) return x;
    return f.element(f.inv_idx(v)) * x;
  }
  throw std::invalid_argument("cannot normalize the zero vector");
}

namespace {

// Orbit closure over GF(2): 27-bit packed points, bitset visited.
Orbit orbit_gf2(const AlbertVector& start, const std::vector<GeneratorSpec>& gens,
                const OrbitOptions& opt) {
  const Field& f = start.field();
  std::vector<gf2::Map> maps;
  maps.reserve(gens.size());
  for (const auto& g : gens) maps.push_back(gf2::pack_map(generator_matrix(f, g)));

  std::vector<std::atomic<uint64_t>> visited((1u << 27) / 64);
  auto test_and_set = [&](uint32_t v) {
    uint64_t bit = 1ull << (v & 63);
    return (visited[v >> 6].fetch_or(bit, std::memory_order_relaxed) & bit) != 0;
  };

  uint32_t s = gf2::pack_vector(start);
  std::vector<uint32_t> frontier{s};
  test_and_set(s);
  uint64_t total = 1;
  unsigned nthreads = resolve_threads(opt.threads);
  while (!frontier.empty()) {
    std::vector<std::vector<uint32_t>> next(nthreads);
    parallel_chunks(frontier.size(), nthreads, [&](uint64_t b, uint64_t e, unsigned tid) {
      auto& out = next[tid];
      for (uint64_t i = b; i < e; ++i) {
        uint32_t v = frontier[i];
        for (const auto& m : maps) {
          uint32_t w = m.apply(v);
          if (!test_and_set(w)) out.push_back(w);
        }
      }
    });
    frontier.clear();
    for (auto& part : next) {
      total += part.size();
      frontier.insert(frontier.end(), part.begin(), part.end());
    }
    if (total > opt.max_points) throw std::runtime_error("orbit exceeds the configured budget");
  }
  Orbit o;
  o.size = total;
  if (opt.keep_points) {
    for (uint64_t w = 0; w < (1u << 27); ++w)
      if ((visited[w >> 6].load() >> (w & 63)) & 1)
        o.points.push_back(gf2::unpack_vector(f, static_cast<uint32_t>(w)));
  }
  return o;
}

struct VecKey {
  std::array<uint8_t, 27> v;
  bool operator==(const VecKey& o) const { return v == o.v; }
};
struct VecKeyHash {
  size_t operator()(const VecKey& k) const {
    uint64_t h = 1469598103934665603ull;
    for (uint8_t b : k.v) {
      h ^= b;
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

Orbit orbit_generic(const AlbertVector& start, const std::vector<GeneratorSpec>& gens,
                    const OrbitOptions& opt) {
  const Field& f = start.field();
  std::vector<AlbertMap> maps;
  maps.reserve(gens.size());
  for (const auto& g : gens) maps.push_back(generator_matrix(f, g));

  auto key_of = [](const AlbertVector& x) {
    VecKey k;
    for (unsigned i = 0; i < 27; ++i) k.v[i] = static_cast<uint8_t>(x.coord_idx(i));
    return k;
  };
  std::unordered_set<VecKey, VecKeyHash> visited;
  AlbertVector s = normalize_point(start);
  visited.insert(key_of(s));
  std::vector<AlbertVector> frontier{s};
  while (!frontier.empty()) {
    std::vector<AlbertVector> next;
    for (const AlbertVector& v : frontier)
      for (const auto& m : maps) {
        AlbertVector w = normalize_point(m.apply(v));
        if (visited.insert(key_of(w)).second) next.push_back(w);
      }
    if (visited.size() > opt.max_points)
      throw std::runtime_error("orbit exceeds the configured budget");
    frontier = std::move(next);
  }
  Orbit o;
  o.size = visited.size();
  if (opt.keep_points) {
    for (const auto& k : visited) {
      AlbertVector x(f);
      for (unsigned i = 0; i < 27; ++i) x.set_coord(i, f.element(k.v[i]));
      o.points.push_back(x);
    }
  }
  return o;
}

}  // namespace

Orbit point_orbit(const AlbertVector& start, const std::vector<GeneratorSpec>& gens,
                  const OrbitOptions& opt) {
  if (start.is_zero()) throw std::invalid_argument("orbit of the zero vector is not defined");
  // Over GF(2) every 1-space has a single nonzero vector, so points and
  // vectors coincide and the packed path applies.
  Orbit o = (start.field().q() == 2) ? orbit_gf2(start, gens, opt)
                                     : orbit_generic(start, gens, opt);
  if (opt.keep_points) {
    std::sort(o.points.begin(), o.points.end(), [](const AlbertVector& a, const AlbertVector& b) {
      for (unsigned i = 0; i < 27; ++i)
        if (a.coord_idx(i) != b.coord_idx(i)) return a.coord_idx(i) < b.coord_idx(i);
      return false;
    });
  }
  return o;
}

namespace {

std::vector<Octonion> all_octonions(const Field& f) {
  uint64_t n = 1;
  for (int i = 0; i < 8; ++i) n *= f.q();
  std::vector<Octonion> out;
  out.reserve(n);
  for (uint64_t v = 0; v < n; ++v) {
    Octonion x(f);
    uint64_t t = v;
    for (unsigned i = 0; i < 8; ++i) {
      x.set_coord(i, f.element(static_cast<unsigned>(t % f.q())));
      t /= f.q();
    }
    out.push_back(x);
  }
  return out;
}

}  // namespace

std::vector<GeneratorSpec> full_orbit_generators(const Field& f) {
  std::vector<GeneratorSpec> gens;
  for (GenKind k : {GenKind::M, GenKind::L, GenKind::Mp, GenKind::Lp, GenKind::Mpp, GenKind::Lpp})
    for (const Octonion& x : all_octonions(f)) gens.emplace_back(k, x);
  gens.emplace_back(GenKind::Delta);
  gens.emplace_back(GenKind::Tau);
  return gens;
}

std::vector<GeneratorSpec> white_stabilizer_generators(const Field& f) {
  std::vector<GeneratorSpec> gens;
  for (const Octonion& x : all_octonions(f))
    for (GenKind k : {GenKind::M, GenKind::L, GenKind::Mp, GenKind::Lpp}) gens.emplace_back(k, x);
  for (const Octonion& u : all_octonions(f))
    if (norm(u) == f.one()) gens.emplace_back(GenKind::Pupp, u);
  return gens;
}

std::vector<GeneratorSpec> j10_stabilizer_generators(const Field& f) {
  std::vector<GeneratorSpec> gens;
  for (const Octonion& x : all_octonions(f))
    for (GenKind k : {GenKind::M, GenKind::Mpp, GenKind::L, GenKind::Lp}) gens.emplace_back(k, x);
  for (const Octonion& u : all_octonions(f))
    if (!norm(u).is_zero()) gens.emplace_back(GenKind::PScale, u);
  return gens;
}

CanonicalForm reduce_to_canonical(const AlbertVector& input) {
  if (input.is_zero()) throw std::invalid_argument("cannot reduce the zero vector");
  const Field& f = input.field();
  AlbertVector cur = input;
  GeneratorWord word;
  auto apply = [&](GeneratorSpec g) {
    cur = apply_generator(g, cur);
    word.push_back(std::move(g));
  };
  auto tau = [&] { apply(GeneratorSpec(GenKind::Tau)); };
  auto first_with_nonzero_trace_pair = [&](const Octonion& c) {
    for (unsigned i = 0; i < 8; ++i) {
      Octonion x = Octonion::basis(f, i);
      if (!trace(c * x).is_zero()) return x;
    }
    throw std::logic_error("trace pairing is nondegenerate");
  };
  // u with N(u) = nu, always available in the split algebra.
  auto scaling_param = [&](const FieldElement& nu) {
    Octonion u(f);
    u.set_coord(kE0, nu);
    u.set_coord(kEm0, f.one());
    return u;
  };
  // Scales the b coordinate of a diagonal vector by nu (and a by nu^{-1}).
  auto scale_b = [&](const FieldElement& nu) {
    tau();
    apply(GeneratorSpec(GenKind::PScale, scaling_param(nu)));
    tau();
    tau();
  };

  // Step 1: make (a, b, c) nonzero via L_x with T(Cx) != 0.
  if (cur.a().is_zero() && cur.b().is_zero() && cur.c().is_zero()) {
    if (cur.C().is_zero()) {
      if (!cur.B().is_zero()) {
        tau();
      } else {
        tau();
        tau();
      }
    }
    apply(GeneratorSpec(GenKind::L, first_with_nonzero_trace_pair(cur.C())));
  }
  // Step 2: rotate a nonzero scalar into the c slot.
  if (cur.c().is_zero()) {
    if (!cur.b().is_zero()) {
      tau();
    } else {
      tau();
      tau();
    }
  }
  // Step 3: clear B.
  if (!cur.B().is_zero()) apply(GeneratorSpec(GenKind::Mpp, -(cur.c().inv() * cur.B())));
  // Step 4: clear A.
  if (!cur.A().is_zero()) apply(GeneratorSpec(GenKind::Lp, -(cur.c().inv() * conj(cur.A()))));
  // Steps 5/6: clear C, producing a nonzero scalar first if needed.
  if (!cur.C().is_zero()) {
    if (cur.a().is_zero() && cur.b().is_zero())
      apply(GeneratorSpec(GenKind::L, first_with_nonzero_trace_pair(cur.C())));
    if (!cur.a().is_zero()) {
      apply(GeneratorSpec(GenKind::M, -(cur.a().inv() * cur.C())));
    } else {
      apply(GeneratorSpec(GenKind::L, -(cur.b().inv() * conj(cur.C()))));
    }
  }
  // Step 7: standardise the diagonal vector.
  unsigned nonzero = !cur.a().is_zero() + !cur.b().is_zero() + !cur.c().is_zero();
  CanonicalForm out{Color::White, f.one(), {}, AlbertVector(f)};
  if (nonzero == 1) {
    out.kind = Color::White;
    if (cur.c().is_zero()) {
      if (!cur.b().is_zero()) {
        tau();
      } else {
        tau();
        tau();
      }
    }
    if (cur.c() != f.one())
      apply(GeneratorSpec(GenKind::PScale, scaling_param(cur.c().inv())));
  } else if (nonzero == 2) {
    out.kind = Color::Grey;
    // rotate the zero into the a slot
    if (!cur.a().is_zero()) {
      if (cur.b().is_zero()) {
        tau();
        tau();
      } else {
        tau();
      }
    }
    if (cur.c() != f.one())
      apply(GeneratorSpec(GenKind::PScale, scaling_param(cur.c().inv())));
    if (cur.b() != f.one()) scale_b(cur.b().inv());
  } else {
    out.kind = Color::Black;
    if (cur.c() != f.one())
      apply(GeneratorSpec(GenKind::PScale, scaling_param(cur.c().inv())));
    if (cur.b() != f.one()) scale_b(cur.b().inv());
    out.lambda = cur.a();
  }
  out.word = std::move(word);
  out.representative = cur;
  return out;
}

}  // namespace e6
