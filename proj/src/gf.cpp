#include "albert/gf.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace e6 {

namespace {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Built-in monic irreducible modulus per (p, k), coefficients c0..ck.
// Each is the first irreducible polynomial in the field's enumeration
// order of the lower coefficients; re-verified at construction.
struct ModulusEntry {
  unsigned p, k;
  std::array<unsigned, 9> c;  // c0..ck, unused tail zero
};
constexpr ModulusEntry kBuiltinModuli[] = {
    {2, 2, {1, 1, 1}},
    {2, 3, {1, 1, 0, 1}},
    {2, 4, {1, 1, 0, 0, 1}},
    {2, 5, {1, 0, 1, 0, 0, 1}},
    {2, 6, {1, 1, 0, 0, 0, 0, 1}},
    {2, 7, {1, 1, 0, 0, 0, 0, 0, 1}},
    {2, 8, {1, 1, 0, 1, 1, 0, 0, 0, 1}},
    {3, 2, {1, 0, 1}},
    {3, 3, {1, 2, 0, 1}},
    {3, 4, {2, 1, 0, 0, 1}},
    {3, 5, {1, 2, 0, 0, 0, 1}},
    {5, 2, {2, 0, 1}},
    {5, 3, {1, 1, 0, 1}},
    {7, 2, {1, 0, 1}},
    {11, 2, {1, 0, 1}},
    {13, 2, {2, 0, 1}},
};

std::vector<unsigned> builtin_modulus(unsigned p, unsigned k) {
  for (const auto& e : kBuiltinModuli)
    if (e.p == p && e.k == k) return std::vector<unsigned>(e.c.begin(), e.c.begin() + k + 1);
  throw std::invalid_argument("no built-in modulus for GF(" + std::to_string(p) + "^" +
                              std::to_string(k) + ")");
}

using Poly = std::vector<unsigned>;  // coefficients c0.., over Z/p

// Remainder of f modulo monic g.
Poly poly_mod(Poly f, const Poly& g, unsigned p) {
  const size_t dg = g.size() - 1;
  while (f.size() > dg) {
    unsigned lead = f.back();
    if (lead != 0) {
      size_t shift = f.size() - 1 - dg;
      for (size_t i = 0; i <= dg; ++i)
        f[shift + i] = (f[shift + i] + p - (lead * g[i]) % p) % p;
    }
    f.pop_back();
  }
  f.resize(dg, 0);
  return f;
}

bool poly_is_zero(const Poly& f) {
  return std::all_of(f.begin(), f.end(), [](unsigned c) { return c == 0; });
}

// Trial division by every monic polynomial of degree 1..k/2.
bool is_irreducible(const Poly& m, unsigned p) {
  const size_t k = m.size() - 1;
  for (size_t d = 1; d <= k / 2; ++d) {
    unsigned long long count = 1;
    for (size_t i = 0; i < d; ++i) count *= p;
    for (unsigned long long idx = 0; idx < count; ++idx) {
      Poly g(d + 1, 0);
      unsigned long long t = idx;
      for (size_t i = 0; i < d; ++i) {
        g[i] = static_cast<unsigned>(t % p);
        t /= p;
      }
      g[d] = 1;
      if (poly_is_zero(poly_mod(m, g, p))) return false;
    }
  }
  return true;
}

}  // namespace

Field::Field(unsigned q) {
  auto [p, k] = factor_prime_power(q);
  p_ = p;
  k_ = k;
  q_ = q;
  if (k_ > 1) modulus_ = builtin_modulus(p_, k_);
  build_tables();
}

Field::Field(unsigned p, unsigned k, const std::vector<unsigned>& modulus)
    : p_(p), k_(k), modulus_(modulus) {
  if (!is_prime(p_)) throw std::invalid_argument("characteristic must be prime");
  if (k_ < 1) throw std::invalid_argument("extension degree must be >= 1");
  unsigned long long q = 1;
  for (unsigned i = 0; i < k_; ++i) {
    q *= p_;
    if (q > 256) throw std::invalid_argument("field size exceeds the supported budget (q <= 256)");
  }
  q_ = static_cast<unsigned>(q);
  if (k_ == 1) {
    if (!modulus_.empty()) throw std::invalid_argument("prime field takes no modulus");
  } else {
    if (modulus_.size() != k_ + 1 || modulus_.back() != 1)
      throw std::invalid_argument("modulus must be monic of degree k");
    for (unsigned c : modulus_)
      if (c >= p_) throw std::invalid_argument("modulus coefficient out of range");
    if (!is_irreducible(modulus_, p_))
      throw std::invalid_argument("modulus polynomial is reducible");
  }
  build_tables();
}

void Field::build_tables() {
  if (q_ > 256) throw std::invalid_argument("field size exceeds the supported budget (q <= 256)");
  if (k_ == 1 && !is_prime(p_)) throw std::invalid_argument("characteristic must be prime");
  if (k_ > 1 && !is_irreducible(modulus_, p_))
    throw std::invalid_argument("modulus polynomial is reducible");

  auto digits = [&](unsigned idx) {
    Poly c(k_);
    for (unsigned i = 0; i < k_; ++i) {
      c[i] = idx % p_;
      idx /= p_;
    }
    return c;
  };
  auto index_of = [&](const Poly& c) {
    unsigned idx = 0;
    for (unsigned i = k_; i-- > 0;) idx = idx * p_ + c[i];
    return idx;
  };

  add_.resize(static_cast<size_t>(q_) * q_);
  mul_.resize(static_cast<size_t>(q_) * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  for (unsigned a = 0; a < q_; ++a) {
    Poly ca = digits(a);
    Poly na(k_);
    for (unsigned i = 0; i < k_; ++i) na[i] = (p_ - ca[i]) % p_;
    neg_[a] = static_cast<uint8_t>(index_of(na));
    for (unsigned b = 0; b < q_; ++b) {
      Poly cb = digits(b);
      Poly s(k_);
      for (unsigned i = 0; i < k_; ++i) s[i] = (ca[i] + cb[i]) % p_;
      add_[static_cast<size_t>(a) * q_ + b] = static_cast<uint8_t>(index_of(s));
      Poly prod(2 * k_ - 1, 0);
      for (unsigned i = 0; i < k_; ++i)
        for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
      Poly r = (k_ == 1) ? Poly{prod[0] % p_} : poly_mod(prod, modulus_, p_);
      mul_[static_cast<size_t>(a) * q_ + b] = static_cast<uint8_t>(index_of(r));
    }
  }
  for (unsigned a = 1; a < q_; ++a)
    for (unsigned b = 1; b < q_; ++b)
      if (mul_[static_cast<size_t>(a) * q_ + b] == 1) {
        inv_[a] = static_cast<uint8_t>(b);
        break;
      }
}

FieldElement Field::from_coeffs(const std::vector<unsigned>& c) const {
  if (c.size() != k_) throw std::invalid_argument("coefficient vector has wrong length");
  unsigned idx = 0;
  for (unsigned i = k_; i-- > 0;) {
    if (c[i] >= p_) throw std::invalid_argument("coefficient out of range [0, p)");
    idx = idx * p_ + c[i];
  }
  return FieldElement(this, idx);
}

std::vector<FieldElement> Field::elements() const {
  std::vector<FieldElement> out;
  out.reserve(q_);
  for (unsigned i = 0; i < q_; ++i) out.push_back(FieldElement(this, i));
  return out;
}

std::vector<unsigned> FieldElement::coeffs() const {
  const Field& f = *field_;
  std::vector<unsigned> c(f.k());
  unsigned idx = idx_;
  for (unsigned i = 0; i < f.k(); ++i) {
    c[i] = idx % f.p();
    idx /= f.p();
  }
  return c;
}

void require_same_field(const Field& a, const Field& b) {
  if (&a == &b) return;
  if (!a.same_spec(b)) throw std::invalid_argument("operands belong to different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  require_same_field(*field_, *o.field_);
  return FieldElement(field_, field_->add_idx(idx_, o.idx_));
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  require_same_field(*field_, *o.field_);
  return FieldElement(field_, field_->sub_idx(idx_, o.idx_));
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  require_same_field(*field_, *o.field_);
  return FieldElement(field_, field_->mul_idx(idx_, o.idx_));
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  require_same_field(*field_, *o.field_);
  return FieldElement(field_, field_->mul_idx(idx_, field_->inv_idx(o.idx_)));
}
FieldElement FieldElement::operator-() const {
  return FieldElement(field_, field_->neg_idx(idx_));
}
FieldElement FieldElement::inv() const {
  return FieldElement(field_, field_->inv_idx(idx_));
}
bool FieldElement::operator==(const FieldElement& o) const {
  require_same_field(*field_, *o.field_);
  return idx_ == o.idx_;
}

std::string to_string(const FieldElement& x) {
  const Field& f = x.field();
  if (f.k() == 1) return std::to_string(x.index());
  std::ostringstream os;
  os << '[';
  auto c = x.coeffs();
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) os << ',';
    os << c[i];
  }
  os << ']';
  return os.str();
}

FieldElement parse_field_element(const Field& f, std::string_view text) {
  size_t b = text.find_first_not_of(" \t");
  size_t e = text.find_last_not_of(" \t");
  if (b == std::string_view::npos) throw std::invalid_argument("empty field element literal");
  text = text.substr(b, e - b + 1);
  if (!text.empty() && text.front() == '[') {
    if (text.back() != ']') throw std::invalid_argument("unterminated coefficient list");
    std::string body(text.substr(1, text.size() - 2));
    std::vector<unsigned> c;
    std::istringstream is(body);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      long long v = 0;
      try {
        v = std::stoll(tok);
      } catch (...) {
        throw std::invalid_argument("bad coefficient '" + tok + "'");
      }
      long long r = v % static_cast<long long>(f.p());
      if (r < 0) r += f.p();
      c.push_back(static_cast<unsigned>(r));
    }
    if (c.size() != f.k()) throw std::invalid_argument("coefficient list has wrong length");
    return f.from_coeffs(c);
  }
  long long v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw std::invalid_argument("bad field element literal '" + std::string(text) + "'");
  return f.from_int(v);
}

std::pair<unsigned, unsigned> factor_prime_power(unsigned long long q) {
  if (q < 2) throw std::invalid_argument("q must be a prime power >= 2");
  for (unsigned p = 2; p <= q; ++p) {
    if (q % p == 0) {
      if (!is_prime(p)) break;
      unsigned long long t = q;
      unsigned k = 0;
      while (t % p == 0) {
        t /= p;
        ++k;
      }
      if (t != 1) throw std::invalid_argument("q is not a prime power");
      return {p, k};
    }
  }
  throw std::invalid_argument("q is not a prime power");
}

}  // namespace e6
