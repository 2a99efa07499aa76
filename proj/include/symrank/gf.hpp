#pragma once

// Finite fields F_p ⊆ F_q ⊆ F_{q^m} as a tower of polynomial quotients.
//
// Every element is a packed index: the coordinate vector over the immediate
// base field, read as base-|base| digits (coordinate 0 least significant).
// Because each base coordinate is itself packed the same way, the index is
// also the base-p digit string of the element over the prime field, so
// addition is digit-wise mod p at every level and F_q embeds into F_{q^m}
// as the indices below q.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace symrank::gf {

using Elem = std::uint32_t;

inline constexpr std::uint64_t kMaxFieldSize = std::uint64_t{1} << 20;

// ---------------------------------------------------------------------------
// Integer helpers

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// (p, e) with q = p^e, or nullopt when q is not a prime power.
inline std::optional<std::pair<unsigned, unsigned>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  const auto factors = prime_factors(q);
  if (factors.size() != 1) return std::nullopt;
  unsigned e = 0;
  while (q > 1) {
    q /= factors[0];
    ++e;
  }
  return std::pair{static_cast<unsigned>(factors[0]), e};
}

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % n);
}

inline std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t n) {
  std::uint64_t r = 1 % n;
  base %= n;
  while (exp != 0) {
    if (exp & 1U) r = mulmod_u64(r, base, n);
    base = mulmod_u64(base, base, n);
    exp >>= 1U;
  }
  return r;
}

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Polynomials over a field, coefficients little-endian. Only what the
/// irreducibility test and modulus search need.
namespace poly {

using Poly = std::vector<Elem>;

void trim(Poly& a);
Poly sub(const Field& f, const Poly& a, const Poly& b);
Poly mod(const Field& f, Poly a, const Poly& m);
Poly mulmod(const Field& f, const Poly& a, const Poly& b, const Poly& m);
Poly powmod(const Field& f, Poly a, std::uint64_t exp, const Poly& m);
Poly gcd(const Field& f, Poly a, Poly b);
bool has_root(const Field& f, const Poly& a);

}  // namespace poly

/// A finite field at one level of the tower: the prime field F_p (level 0),
/// a base field F_q = F_p[x]/(g) (level 1), or an extension
/// F_{q^m} = F_q[y]/(h) (level 2). Immutable; shared through FieldPtr.
class Field {
  struct Token {};

 public:
  Field(Token, unsigned p);
  Field(Token, FieldPtr base, std::vector<Elem> monic_modulus);

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  static FieldPtr prime(unsigned p);
  /// Quotient of `base`'s polynomial ring by `modulus` (must be monic and
  /// irreducible; checked).
  static FieldPtr extension(FieldPtr base, std::vector<Elem> modulus);

  unsigned characteristic() const noexcept { return p_; }
  unsigned level() const noexcept { return level_; }
  /// Degree over the immediate base (1 for the prime field).
  unsigned degree() const noexcept { return degree_; }
  /// Degree over F_p.
  unsigned prime_degree() const noexcept { return prime_degree_; }
  std::uint32_t size() const noexcept { return size_; }
  const FieldPtr& base() const noexcept { return base_; }
  std::uint32_t base_size() const noexcept { return base_ ? base_->size() : 1; }
  /// Monic modulus over the base, little-endian; empty for the prime field.
  const std::vector<Elem>& modulus() const noexcept { return modulus_; }

  bool contains(Elem x) const noexcept { return x < size_; }
  /// Residue class of the indeterminate.
  Elem generator() const;
  Elem primitive_element() const noexcept { return primitive_; }

  Elem add(Elem a, Elem b) const noexcept {
    if (p_ == 2) return a ^ b;
    if (!add_table_.empty()) return add_table_[a * size_ + b];
    return digit_op(a, b, false);
  }
  Elem sub(Elem a, Elem b) const noexcept {
    if (p_ == 2) return a ^ b;
    if (!add_table_.empty()) return add_table_[a * size_ + neg_table_[b]];
    return digit_op(a, b, true);
  }
  Elem neg(Elem a) const noexcept {
    if (p_ == 2) return a;
    if (!neg_table_.empty()) return neg_table_[a];
    return digit_op(0, a, true);
  }
  Elem mul(Elem a, Elem b) const noexcept {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("division by zero in finite field");
    const std::uint32_t order = size_ - 1;
    return exp_[(order - log_[a]) % order];
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t k) const noexcept;

  /// x^{|base|^i}; requires i < degree().
  Elem frobenius(Elem x, unsigned i) const;
  /// Relative trace to the immediate base; the result is a base index.
  Elem trace(Elem x) const;

  std::vector<Elem> coordinates(Elem x) const;
  Elem from_coordinates(std::span<const Elem> coords) const;
  /// Base-p digits of x (length prime_degree()).
  std::vector<unsigned> prime_digits(Elem x) const;
  Elem from_prime_digits(std::span<const unsigned> digits) const;

  /// Schoolbook multiplication modulo the defining polynomial; does not use
  /// the log tables. Independent route used to build and to check them.
  Elem mul_reference(Elem a, Elem b) const;
  Elem pow_reference(Elem a, std::uint64_t k) const;

  /// Same tower, same moduli.
  bool same_as(const Field& other) const noexcept;

  std::string to_string(Elem x) const;

 private:
  Elem digit_op(Elem a, Elem b, bool subtract) const noexcept;
  void build_tables();

  unsigned p_ = 0;
  unsigned level_ = 0;
  unsigned degree_ = 1;
  unsigned prime_degree_ = 1;
  std::uint32_t size_ = 0;
  FieldPtr base_;
  std::vector<Elem> modulus_;
  Elem primitive_ = 1;

  std::vector<Elem> exp_;  // length 2(size-1), so exp_[log a + log b] needs no reduction
  std::vector<std::uint32_t> log_;
  std::vector<Elem> add_table_;  // only for small odd-characteristic fields
  std::vector<Elem> neg_table_;
};

// ---------------------------------------------------------------------------
// Field implementation

inline Field::Field(Token, unsigned p) : p_(p), size_(p) {
  build_tables();
}

inline Field::Field(Token, FieldPtr base, std::vector<Elem> monic_modulus)
    : p_(base->characteristic()),
      level_(base->level() + 1),
      degree_(static_cast<unsigned>(monic_modulus.size() - 1)),
      prime_degree_(base->prime_degree() * static_cast<unsigned>(monic_modulus.size() - 1)),
      base_(std::move(base)),
      modulus_(std::move(monic_modulus)) {
  std::uint64_t n = 1;
  for (unsigned i = 0; i < degree_; ++i) n *= base_->size();
  size_ = static_cast<std::uint32_t>(n);
  build_tables();
}

inline FieldPtr Field::prime(unsigned p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (p > kMaxFieldSize) throw std::invalid_argument("prime exceeds supported field size");
  return std::make_shared<const Field>(Token{}, p);
}

inline bool is_irreducible(const Field& base, std::vector<Elem> f);

inline FieldPtr Field::extension(FieldPtr base, std::vector<Elem> modulus) {
  if (!base) throw std::invalid_argument("extension needs a base field");
  poly::trim(modulus);
  if (modulus.size() < 2) throw std::invalid_argument("modulus must have degree >= 1");
  for (Elem c : modulus) {
    if (!base->contains(c)) throw std::invalid_argument("modulus coefficient outside base field");
  }
  const Elem lead_inv = base->inv(modulus.back());
  for (Elem& c : modulus) c = base->mul(c, lead_inv);

  std::uint64_t n = 1;
  for (std::size_t i = 1; i < modulus.size(); ++i) {
    n *= base->size();
    if (n > kMaxFieldSize) throw std::invalid_argument("field size exceeds 2^20");
  }
  if (!is_irreducible(*base, modulus)) throw std::invalid_argument("modulus is reducible");
  return std::make_shared<const Field>(Token{}, std::move(base), std::move(modulus));
}

inline Elem Field::generator() const {
  if (level_ == 0) throw std::logic_error("prime field has no adjoined generator");
  if (degree_ == 1) return neg(modulus_[0]);  // root of y + c
  return base_size();                         // coordinate vector (0, 1, 0, ...)
}

inline Elem Field::digit_op(Elem a, Elem b, bool subtract) const noexcept {
  Elem result = 0;
  Elem place = 1;
  while (a != 0 || b != 0) {
    const Elem da = a % p_;
    const Elem db = b % p_;
    const Elem d = subtract ? (da + p_ - db) % p_ : (da + db) % p_;
    result += d * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return result;
}

inline Elem Field::pow(Elem a, std::uint64_t k) const noexcept {
  if (k == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t order = size_ - 1;
  return exp_[mulmod_u64(log_[a], k % order, order)];
}

inline Elem Field::frobenius(Elem x, unsigned i) const {
  if (i >= degree_) {
    throw std::out_of_range("frobenius power " + std::to_string(i) + " outside [0, " +
                            std::to_string(degree_) + ")");
  }
  if (x == 0 || i == 0) return x;
  const std::uint64_t order = size_ - 1;
  const std::uint64_t e = powmod_u64(base_size(), i, order);
  return exp_[mulmod_u64(log_[x], e, order)];
}

inline Elem Field::trace(Elem x) const {
  Elem acc = 0;
  for (unsigned i = 0; i < degree_; ++i) acc = add(acc, frobenius(x, i));
  if (base_ && !base_->contains(acc)) throw std::logic_error("trace left the base field");
  return acc;
}

inline std::vector<Elem> Field::coordinates(Elem x) const {
  if (level_ == 0) return {x};
  std::vector<Elem> c(degree_);
  const Elem b = base_size();
  for (unsigned i = 0; i < degree_; ++i) {
    c[i] = x % b;
    x /= b;
  }
  return c;
}

inline Elem Field::from_coordinates(std::span<const Elem> coords) const {
  if (coords.size() != degree_) throw std::invalid_argument("wrong number of coordinates");
  const Elem b = level_ == 0 ? size_ : base_size();
  Elem x = 0;
  for (std::size_t i = coords.size(); i-- > 0;) {
    if (coords[i] >= b) throw std::invalid_argument("coordinate outside base field");
    x = x * b + coords[i];
  }
  return x;
}

inline std::vector<unsigned> Field::prime_digits(Elem x) const {
  std::vector<unsigned> d(prime_degree_);
  for (unsigned i = 0; i < prime_degree_; ++i) {
    d[i] = x % p_;
    x /= p_;
  }
  return d;
}

inline Elem Field::from_prime_digits(std::span<const unsigned> digits) const {
  if (digits.size() != prime_degree_) throw std::invalid_argument("wrong number of digits");
  Elem x = 0;
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (digits[i] >= p_) throw std::invalid_argument("digit outside prime field");
    x = x * p_ + digits[i];
  }
  return x;
}

inline Elem Field::mul_reference(Elem a, Elem b) const {
  if (level_ == 0) return static_cast<Elem>((std::uint64_t{a} * b) % p_);
  const Field& k = *base_;
  const auto ca = coordinates(a);
  const auto cb = coordinates(b);
  std::vector<Elem> prod(2 * degree_ - 1, 0);
  for (unsigned i = 0; i < degree_; ++i) {
    if (ca[i] == 0) continue;
    for (unsigned j = 0; j < degree_; ++j) {
      prod[i + j] = k.add(prod[i + j], k.mul_reference(ca[i], cb[j]));
    }
  }
  for (std::size_t top = prod.size(); top-- > degree_;) {
    const Elem c = prod[top];
    if (c == 0) continue;
    for (unsigned j = 0; j < degree_; ++j) {
      prod[top - degree_ + j] = k.sub(prod[top - degree_ + j], k.mul_reference(c, modulus_[j]));
    }
    prod[top] = 0;
  }
  prod.resize(degree_);
  return from_coordinates(prod);
}

inline Elem Field::pow_reference(Elem a, std::uint64_t k) const {
  Elem r = 1;
  while (k != 0) {
    if (k & 1U) r = mul_reference(r, a);
    a = mul_reference(a, a);
    k >>= 1U;
  }
  return r;
}

inline void Field::build_tables() {
  if (p_ != 2 && size_ <= 256) {
    add_table_.resize(std::size_t{size_} * size_);
    neg_table_.resize(size_);
    for (Elem a = 0; a < size_; ++a) {
      neg_table_[a] = digit_op(0, a, true);
      for (Elem b = 0; b < size_; ++b) add_table_[a * size_ + b] = digit_op(a, b, false);
    }
  }

  const std::uint64_t order = size_ - 1;
  const auto factors = prime_factors(order);
  primitive_ = 0;
  for (Elem g = 1; g < size_ && primitive_ == 0; ++g) {
    bool ok = true;
    for (std::uint64_t r : factors) {
      if (pow_reference(g, order / r) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) primitive_ = g;
  }
  if (primitive_ == 0) throw std::logic_error("no primitive element; modulus not irreducible");

  exp_.assign(2 * std::max<std::uint64_t>(order, 1), 0);
  log_.assign(size_, 0);
  Elem x = 1;
  for (std::uint64_t i = 0; i < order; ++i) {
    exp_[i] = x;
    log_[x] = static_cast<std::uint32_t>(i);
    x = mul_reference(x, primitive_);
  }
  if (x != 1) throw std::logic_error("primitive element order mismatch");
  for (std::uint64_t i = order; i < exp_.size(); ++i) exp_[i] = exp_[i - order];
}

inline bool Field::same_as(const Field& other) const noexcept {
  if (this == &other) return true;
  if (p_ != other.p_ || level_ != other.level_ || modulus_ != other.modulus_) return false;
  if (!base_) return !other.base_;
  return other.base_ && base_->same_as(*other.base_);
}

inline std::string Field::to_string(Elem x) const {
  if (level_ == 0) return std::to_string(x);
  std::string s = "[";
  const auto c = coordinates(x);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += base_->to_string(c[i]);
  }
  return s + "]";
}

// ---------------------------------------------------------------------------
// Polynomial helpers

namespace poly {

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly sub(const Field& f, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = f.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  }
  trim(r);
  return r;
}

// m must be nonzero; need not be monic.
inline Poly mod(const Field& f, Poly a, const Poly& m) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const Elem lead_inv = f.inv(m.back());
  while (a.size() > dm) {
    const Elem c = f.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t j = 0; j <= dm; ++j) a[shift + j] = f.sub(a[shift + j], f.mul(c, m[j]));
    trim(a);
  }
  return a;
}

inline Poly mulmod(const Field& f, const Poly& a, const Poly& b, const Poly& m) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = f.add(prod[i + j], f.mul(a[i], b[j]));
  }
  return mod(f, std::move(prod), m);
}

inline Poly powmod(const Field& f, Poly a, std::uint64_t exp, const Poly& m) {
  Poly r = mod(f, Poly{1}, m);
  a = mod(f, std::move(a), m);
  while (exp != 0) {
    if (exp & 1U) r = mulmod(f, r, a, m);
    a = mulmod(f, a, a, m);
    exp >>= 1U;
  }
  return r;
}

inline Poly gcd(const Field& f, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Elem inv = f.inv(a.back());
    for (Elem& c : a) c = f.mul(c, inv);
  }
  return a;
}

inline bool has_root(const Field& f, const Poly& a) {
  for (Elem x = 0; x < f.size(); ++x) {
    Elem acc = 0;  // Horner
    for (std::size_t i = a.size(); i-- > 0;) acc = f.add(f.mul(acc, x), a[i]);
    if (acc == 0) return true;
  }
  return false;
}

}  // namespace poly

/// Root test, and for degree > 3 Rabin's test:
/// x^{Q^n} = x mod f and gcd(x^{Q^{n/r}} - x, f) = 1 for each prime r | n.
inline bool is_irreducible(const Field& base, std::vector<Elem> f) {
  poly::trim(f);
  if (f.size() < 2) return false;
  const std::size_t n = f.size() - 1;
  if (n == 1) return true;
  if (poly::has_root(base, f)) return false;
  if (n <= 3) return true;

  const std::uint64_t q = base.size();
  const poly::Poly x{0, 1};
  // frob_pows[k] = x^{Q^k} mod f
  std::vector<poly::Poly> frob_pows{poly::mod(base, x, f)};
  for (std::size_t k = 1; k <= n; ++k) frob_pows.push_back(poly::powmod(base, frob_pows.back(), q, f));
  if (poly::sub(base, frob_pows[n], poly::mod(base, x, f)).size() != 0) return false;
  for (std::uint64_t r : prime_factors(n)) {
    const auto g = poly::gcd(base, poly::sub(base, frob_pows[n / r], x), f);
    if (g.size() != 1) return false;
  }
  return true;
}

/// Lowest monic irreducible of the given degree, ordered by the packed index
/// of its lower coefficients (c_0 + c_1 Q + ...).
inline std::vector<Elem> default_modulus(const Field& base, unsigned degree) {
  if (degree < 1) throw std::invalid_argument("degree must be >= 1");
  std::uint64_t count = 1;
  for (unsigned i = 0; i < degree; ++i) {
    count *= base.size();
    if (count > kMaxFieldSize) throw std::invalid_argument("field size exceeds 2^20");
  }
  std::vector<Elem> f(degree + 1, 0);
  f[degree] = 1;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t rest = idx;
    for (unsigned i = 0; i < degree; ++i) {
      f[i] = static_cast<Elem>(rest % base.size());
      rest /= base.size();
    }
    if (is_irreducible(base, f)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");
}

// ---------------------------------------------------------------------------
// Element wrapper

/// A field element bound to its field. Heavy loops use raw Elem indices with
/// Field methods instead.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Elem value) : field_(std::move(field)), value_(value) {
    if (!field_ || !field_->contains(value_)) throw std::invalid_argument("element outside field");
  }

  const FieldPtr& field() const noexcept { return field_; }
  Elem value() const noexcept { return value_; }
  bool is_zero() const noexcept { return value_ == 0; }
  std::vector<Elem> coordinates() const { return field_->coordinates(value_); }

  FieldElement operator+(const FieldElement& o) const { return {field_, field_->add(value_, same(o))}; }
  FieldElement operator-(const FieldElement& o) const { return {field_, field_->sub(value_, same(o))}; }
  FieldElement operator*(const FieldElement& o) const { return {field_, field_->mul(value_, same(o))}; }
  FieldElement operator/(const FieldElement& o) const { return {field_, field_->div(value_, same(o))}; }
  FieldElement operator-() const { return {field_, field_->neg(value_)}; }
  FieldElement inverse() const { return {field_, field_->inv(value_)}; }
  FieldElement pow(std::uint64_t k) const { return {field_, field_->pow(value_, k)}; }

  bool operator==(const FieldElement& o) const noexcept {
    return value_ == o.value_ && field_->same_as(*o.field_);
  }

  std::string to_string() const { return field_->to_string(value_); }

 private:
  Elem same(const FieldElement& o) const {
    if (!field_->same_as(*o.field_)) throw std::invalid_argument("field mismatch");
    return o.value_;
  }

  FieldPtr field_;
  Elem value_;
};

inline FieldElement frobenius(const FieldElement& x, unsigned i) {
  return {x.field(), x.field()->frobenius(x.value(), i)};
}

inline FieldElement trace(const FieldElement& x) {
  const auto& f = x.field();
  if (!f->base()) throw std::invalid_argument("trace needs an extension field");
  return {f->base(), f->trace(x.value())};
}

inline std::vector<FieldElement> enumerate_field(const FieldPtr& f) {
  std::vector<FieldElement> out;
  out.reserve(f->size());
  for (Elem x = 0; x < f->size(); ++x) out.emplace_back(f, x);
  return out;
}

// ---------------------------------------------------------------------------
// Builders

/// F_q = F_p[x]/(modulus), q = p^e. Modulus coefficients are over F_p,
/// little-endian, length e + 1.
inline FieldPtr build_base_field(unsigned p, unsigned e,
                                 std::optional<std::vector<Elem>> modulus = std::nullopt) {
  if (e < 1) throw std::invalid_argument("e must be >= 1");
  auto prime = Field::prime(p);
  std::vector<Elem> g = modulus ? *modulus : default_modulus(*prime, e);
  poly::trim(g);
  if (g.size() != e + 1) throw std::invalid_argument("modulus degree must equal e");
  return Field::extension(std::move(prime), std::move(g));
}

/// F_{q^m} over a base field built by build_base_field.
inline FieldPtr build_extension(const FieldPtr& base, unsigned m,
                                std::optional<std::vector<Elem>> modulus = std::nullopt) {
  if (!base || base->level() != 1) throw std::invalid_argument("extension base must be a base field F_q");
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  std::vector<Elem> h = modulus ? *modulus : default_modulus(*base, m);
  poly::trim(h);
  if (h.size() != m + 1) throw std::invalid_argument("modulus degree must equal m");
  return Field::extension(base, std::move(h));
}

/// F_q with the default modulus; q must be a prime power.
inline FieldPtr field_of_order(std::uint64_t q) {
  const auto pe = prime_power(q);
  if (!pe) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  return build_base_field(pe->first, pe->second);
}

// ---------------------------------------------------------------------------
// JSON: {"p", "e", "m", "base_modulus", "ext_modulus"}; ext_modulus
// coefficients are packed F_q indices. A base field has m = 1 and an empty
// ext_modulus.

inline nlohmann::json to_json(const Field& f) {
  if (f.level() == 0) throw std::invalid_argument("serialize F_p as a degree-1 base field");
  const Field& base = f.level() == 1 ? f : *f.base();
  nlohmann::json j;
  j["p"] = f.characteristic();
  j["e"] = base.degree();
  j["m"] = f.level() == 1 ? 1U : f.degree();
  j["base_modulus"] = base.modulus();
  j["ext_modulus"] = f.level() == 1 ? std::vector<Elem>{} : f.modulus();
  return j;
}

inline FieldPtr field_from_json(const nlohmann::json& j) {
  const auto p = j.at("p").get<unsigned>();
  const auto e = j.at("e").get<unsigned>();
  const auto m = j.value("m", 1U);
  auto base = build_base_field(p, e, j.at("base_modulus").get<std::vector<Elem>>());
  const auto ext = j.value("ext_modulus", std::vector<Elem>{});
  if (ext.empty()) {
    if (m != 1) throw std::invalid_argument("ext_modulus required when m > 1");
    return base;
  }
  return build_extension(base, m, ext);
}

}  // namespace symrank::gf
