#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace e6 {

class Field;

/// One element of GF(p^k), stored as its index in the fixed enumeration
/// order of the field (coefficient vectors over Z/p, constant term fastest).
/// Elements are immutable values; arithmetic returns new values.
class FieldElement {
 public:
  FieldElement() : field_(nullptr), idx_(0) {}

  unsigned index() const { return idx_; }
  const Field& field() const { return *field_; }
  bool is_zero() const { return idx_ == 0; }

  /// Coefficient vector over Z/p, constant term first (length k).
  std::vector<unsigned> coeffs() const;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inv() const;

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

 private:
  friend class Field;
  FieldElement(const Field* f, unsigned i) : field_(f), idx_(static_cast<uint16_t>(i)) {}
  const Field* field_;
  uint16_t idx_;
};

/// A finite field GF(p^k) with q = p^k <= 256, backed by full add/mul/inv
/// lookup tables.  For k > 1 the field is F_p[x]/(m(x)) for a monic
/// irreducible modulus m; irreducibility is verified at construction by
/// trial division.  Immutable and thread-safe once constructed.
class Field {
 public:
  /// Field of q elements with the built-in modulus for that (p, k).
  explicit Field(unsigned q);

  /// Extension field with an explicit modulus (coefficients c0..ck, ck = 1).
  Field(unsigned p, unsigned k, const std::vector<unsigned>& modulus);

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  unsigned q() const { return q_; }
  unsigned p() const { return p_; }
  unsigned k() const { return k_; }
  const std::vector<unsigned>& modulus() const { return modulus_; }

  FieldElement element(unsigned idx) const {
    if (idx >= q_) throw std::invalid_argument("field element index out of range");
    return FieldElement(this, idx);
  }
  FieldElement zero() const { return FieldElement(this, 0); }
  FieldElement one() const { return FieldElement(this, 1); }

  /// Integer literal reduced into the prime subfield.
  FieldElement from_int(long long n) const {
    long long r = n % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return FieldElement(this, static_cast<unsigned>(r));
  }
  FieldElement from_coeffs(const std::vector<unsigned>& c) const;

  /// All q elements, in the fixed enumeration order.
  std::vector<FieldElement> elements() const;

  bool same_spec(const Field& o) const {
    return p_ == o.p_ && k_ == o.k_ && modulus_ == o.modulus_;
  }

  // Raw index arithmetic, used by inner loops.
  unsigned add_idx(unsigned a, unsigned b) const { return add_[a * q_ + b]; }
  unsigned sub_idx(unsigned a, unsigned b) const { return add_[a * q_ + neg_[b]]; }
  unsigned mul_idx(unsigned a, unsigned b) const { return mul_[a * q_ + b]; }
  unsigned neg_idx(unsigned a) const { return neg_[a]; }
  unsigned inv_idx(unsigned a) const {
    if (a == 0) throw std::domain_error("zero is not invertible");
    return inv_[a];
  }

 private:
  void build_tables();
  unsigned q_, p_, k_;
  std::vector<unsigned> modulus_;  // empty when k == 1
  std::vector<uint8_t> add_, mul_, neg_, inv_;
};

void require_same_field(const Field& a, const Field& b);

/// Canonical text form: "3" for prime fields, "[c0,c1,...]" for extensions.
std::string to_string(const FieldElement& x);

/// Parses a field-element literal: an integer (reduced mod p), or a
/// bracketed coefficient list "[c0,...,c_{k-1}]" for extension fields.
FieldElement parse_field_element(const Field& f, std::string_view text);

/// Factors q as p^k; throws if q is not a prime power >= 2.
std::pair<unsigned, unsigned> factor_prime_power(unsigned long long q);

}  // namespace e6
