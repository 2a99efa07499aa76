#pragma once

// q-polynomials over F_{q^m} and the symmetric ones among them, identified
// with Sym_q(m) through the trace form G[i][j] = Tr(e_i f(e_j)). Builds the
// symmetric MRD codes
//   S_{q,m,d} = { b_0 x + sum_{j=1}^{(m-d)/2} (b_j x^{q^j} + (b_j x)^{q^{m-j}}) }
// for m - d even, and their punctured versions for m - d odd.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "symrank/codes.hpp"
#include "symrank/counting.hpp"
#include "symrank/errors.hpp"
#include "symrank/gf.hpp"
#include "symrank/linalg.hpp"
#include "symrank/matspace.hpp"
#include "symrank/sym_code.hpp"

namespace symrank {

/// sum_{i<m} c_i x^{q^i} with c_i in F_{q^m}.
class QPoly {
 public:
  QPoly(FieldPtr ext, std::vector<Elem> coeffs) : ext_(std::move(ext)), coeffs_(std::move(coeffs)) {
    if (!ext_ || ext_->level() != 2) throw std::invalid_argument("q-polynomials live over an extension F_{q^m}");
    if (coeffs_.size() != ext_->degree()) throw std::invalid_argument("q-polynomial needs exactly m coefficients");
    for (Elem c : coeffs_) {
      if (!ext_->contains(c)) throw std::invalid_argument("coefficient outside F_{q^m}");
    }
  }

  static QPoly zero(const FieldPtr& ext) { return QPoly(ext, std::vector<Elem>(ext->degree(), 0)); }
  static QPoly identity(const FieldPtr& ext) { return monomial(ext, 1, 0); }
  /// c x^{q^power}
  static QPoly monomial(const FieldPtr& ext, Elem c, unsigned power) {
    std::vector<Elem> coeffs(ext->degree(), 0);
    coeffs.at(power) = c;
    return QPoly(ext, std::move(coeffs));
  }

  const FieldPtr& field() const noexcept { return ext_; }
  unsigned m() const noexcept { return ext_->degree(); }
  std::span<const Elem> coeffs() const noexcept { return coeffs_; }
  Elem coeff(unsigned i) const { return coeffs_.at(i); }

  QPoly& operator+=(const QPoly& o) {
    if (!ext_->same_as(*o.ext_)) throw std::invalid_argument("field mismatch");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = ext_->add(coeffs_[i], o.coeffs_[i]);
    return *this;
  }
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }

  /// a f for a in F_q (given as a base index).
  QPoly scaled(Elem a) const {
    if (a >= ext_->base_size()) throw std::invalid_argument("scalar outside F_q");
    QPoly out = *this;
    for (Elem& c : out.coeffs_) c = ext_->mul(a, c);
    return out;
  }

  bool operator==(const QPoly& o) const noexcept { return coeffs_ == o.coeffs_ && ext_->same_as(*o.ext_); }

 private:
  FieldPtr ext_;
  std::vector<Elem> coeffs_;
};

/// c_{m-i} = c_i^{q^{m-i}} for every i, indices mod m.
inline bool is_symmetric_qpoly(const QPoly& f) {
  const unsigned m = f.m();
  for (unsigned i = 0; i < m; ++i) {
    const unsigned j = (m - i) % m;
    if (f.coeff(j) != f.field()->frobenius(f.coeff(i), j)) return false;
  }
  return true;
}

inline Elem eval(const QPoly& f, Elem x) {
  const gf::Field& k = *f.field();
  if (!k.contains(x)) throw std::invalid_argument("argument outside F_{q^m}");
  Elem acc = 0;
  for (unsigned i = 0; i < f.m(); ++i) {
    if (f.coeff(i) != 0) acc = k.add(acc, k.mul(f.coeff(i), k.frobenius(x, i)));
  }
  return acc;
}

inline gf::FieldElement eval(const QPoly& f, const gf::FieldElement& x) {
  if (!x.field()->same_as(*f.field())) throw std::invalid_argument("field mismatch");
  return {f.field(), eval(f, x.value())};
}

/// {1, α, ..., α^{m-1}}: the unit coordinate vectors.
inline std::vector<Elem> polynomial_basis(const gf::Field& ext) {
  std::vector<Elem> basis(ext.degree());
  Elem unit = 1;
  for (auto& b : basis) {
    b = unit;
    unit *= ext.base_size();
  }
  return basis;
}

namespace detail {

// Row-major m x m matrix whose row j is the F_q-coordinate vector of xs[j].
inline std::vector<Elem> coordinate_rows(const gf::Field& ext, std::span<const Elem> xs) {
  std::vector<Elem> rows;
  rows.reserve(xs.size() * ext.degree());
  for (Elem x : xs) {
    const auto c = ext.coordinates(x);
    rows.insert(rows.end(), c.begin(), c.end());
  }
  return rows;
}

}  // namespace detail

/// Rank of f as an F_q-linear map of F_{q^m}: m - dim ker f.
inline unsigned qpoly_rank(const QPoly& f) {
  const gf::Field& ext = *f.field();
  std::vector<Elem> images;
  for (Elem e : polynomial_basis(ext)) images.push_back(eval(f, e));
  return linalg::rank(*ext.base(), detail::coordinate_rows(ext, images), ext.degree(), ext.degree());
}

inline bool is_basis(const gf::Field& ext, std::span<const Elem> xs) {
  if (xs.size() != ext.degree()) return false;
  return linalg::rank(*ext.base(), detail::coordinate_rows(ext, xs), xs.size(), ext.degree()) == ext.degree();
}

/// G[i][j] = Tr(e_i f(e_j)); symmetric because f is.
inline SymMatrix gram(const QPoly& f, std::span<const Elem> basis) {
  const gf::Field& ext = *f.field();
  if (!is_basis(ext, basis)) throw std::invalid_argument("gram needs an F_q-basis of F_{q^m}");
  if (!is_symmetric_qpoly(f)) throw std::invalid_argument("q-polynomial does not satisfy the symmetry condition");
  const unsigned m = ext.degree();
  std::vector<Elem> images(m);
  for (unsigned j = 0; j < m; ++j) images[j] = eval(f, basis[j]);
  std::vector<std::vector<Elem>> g(m, std::vector<Elem>(m));
  for (unsigned i = 0; i < m; ++i) {
    for (unsigned j = 0; j < m; ++j) g[i][j] = ext.trace(ext.mul(basis[i], images[j]));
  }
  // from_rows rejects an asymmetric result
  return SymMatrix::from_rows(ext.base(), g);
}

inline SymMatrix gram(const QPoly& f) { return gram(f, polynomial_basis(*f.field())); }

/// F_q-basis of the symmetric q-polynomials (dimension m(m+1)/2): c_0 free,
/// paired coefficients (c_j, c_j^{q^{m-j}}) for 0 < j < m - j, and for even m
/// a middle coefficient from the subfield F_{q^{m/2}}.
inline std::vector<QPoly> symmetric_qpoly_basis(const FieldPtr& ext) {
  const unsigned m = ext->degree();
  const auto units = polynomial_basis(*ext);
  std::vector<QPoly> out;
  for (Elem b : units) out.push_back(QPoly::monomial(ext, b, 0));
  for (unsigned j = 1; j < m - j; ++j) {
    for (Elem b : units) {
      std::vector<Elem> c(m, 0);
      c[j] = b;
      c[m - j] = ext->frobenius(b, m - j);
      out.emplace_back(ext, std::move(c));
    }
  }
  if (m % 2 == 0 && m > 0) {
    const unsigned h = m / 2;
    // Relative traces x + x^{q^h} span F_{q^h}; keep an independent subset.
    std::vector<Elem> traces;
    for (Elem b : units) traces.push_back(ext->add(b, ext->frobenius(b, h)));
    const auto keep = linalg::independent_rows(*ext->base(), detail::coordinate_rows(*ext, traces), m, m);
    if (keep.size() != h) throw std::logic_error("middle subfield has unexpected dimension");
    for (std::size_t idx : keep) out.push_back(QPoly::monomial(ext, traces[idx], h));
  }
  return out;
}

/// F_q-combination sum coeffs[i] * basis[i].
inline QPoly combine(const std::vector<QPoly>& basis, std::span<const Elem> coeffs, const FieldPtr& ext) {
  QPoly acc = QPoly::zero(ext);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (coeffs[i] != 0) acc += basis[i].scaled(coeffs[i]);
  }
  return acc;
}

/// F_q-spanning set of S_{q,m,d}: each b_j runs over the polynomial basis.
inline std::vector<QPoly> schmidt_generators(const FieldPtr& ext, unsigned d) {
  const unsigned m = ext->degree();
  counting::validate_distance(m, d);
  if ((m - d) % 2 != 0) throw std::invalid_argument("S_{q,m,d} needs m - d even");
  const auto units = polynomial_basis(*ext);
  std::vector<QPoly> out;
  for (Elem b : units) out.push_back(QPoly::monomial(ext, b, 0));
  for (unsigned j = 1; j <= (m - d) / 2; ++j) {
    for (Elem b : units) {
      std::vector<Elem> c(m, 0);
      c[j] = b;
      c[m - j] = ext->frobenius(b, m - j);  // (b x)^{q^{m-j}} = b^{q^{m-j}} x^{q^{m-j}}
      out.emplace_back(ext, std::move(c));
    }
  }
  return out;
}

/// S_{q,m,d} in Sym_q(m), dimension m(m-d+2)/2, over the base of `ext`.
inline SymCode build_schmidt_code(const FieldPtr& ext, unsigned d) {
  const auto gens = schmidt_generators(ext, d);
  const auto basis_elems = polynomial_basis(*ext);
  std::vector<SymMatrix> basis;
  basis.reserve(gens.size());
  for (const auto& f : gens) {
    if (!is_symmetric_qpoly(f)) throw std::logic_error("Schmidt generator is not symmetric");
    basis.push_back(gram(f, basis_elems));
  }
  return SymCode(ext->base(), ext->degree(), std::move(basis), d);
}

inline SymCode build_schmidt_code(std::uint64_t q, unsigned m, unsigned d) {
  counting::validate_q(q);
  counting::validate_distance(m, d);
  if ((m - d) % 2 != 0) throw std::invalid_argument("S_{q,m,d} needs m - d even");
  return build_schmidt_code(gf::build_extension(gf::field_of_order(q), m), d);
}

struct PuncturedCode {
  SymCode code;
  unsigned parent_order = 0;
  unsigned parent_design_distance = 0;
  std::optional<unsigned> measured_distance;  // empty when over the codeword budget
  bool meets_singleton = false;               // dimension == (m+1)(m-d+1)/2

  bool mrd_verified() const { return meets_singleton && measured_distance && *measured_distance == *code.design_distance(); }
};

/// For m - d odd: S_{q,m+1,d+2} with the last row and column of every basis
/// matrix deleted. Deletion lowers rank by at most 2, so the distance stays
/// >= d, and the dimension is the odd-case Singleton value.
inline PuncturedCode build_punctured_code(const FieldPtr& base, unsigned m, unsigned d, const Budgets& budgets = {}) {
  counting::validate_distance(m, d);
  if ((m - d) % 2 == 0) throw std::invalid_argument("punctured construction needs m - d odd");
  const unsigned parent_d = d + 2;
  const SymCode parent = build_schmidt_code(gf::build_extension(base, m + 1), parent_d);

  std::vector<SymMatrix> basis;
  basis.reserve(parent.basis().size());
  for (const auto& b : parent.basis()) basis.push_back(puncture_matrix(b, m));

  std::optional<SymCode> code;
  try {
    code.emplace(base, m, std::move(basis), d);
  } catch (const std::invalid_argument&) {
    throw ConstructionError("puncturing S_{" + std::to_string(base->size()) + "," + std::to_string(m + 1) + "," +
                            std::to_string(parent_d) + "} collapsed its dimension");
  }
  PuncturedCode out{std::move(*code), m + 1, parent_d, std::nullopt, false};
  out.meets_singleton = out.code.dimension() == counting::singleton_max_dim(m, d);
  try {
    out.measured_distance = min_distance(out.code, budgets);
  } catch (const BudgetExceeded&) {
  }
  return out;
}

inline PuncturedCode build_punctured_code(std::uint64_t q, unsigned m, unsigned d, const Budgets& budgets = {}) {
  counting::validate_q(q);
  return build_punctured_code(gf::field_of_order(q), m, d, budgets);
}

/// S_{q,m,d} when m - d is even, the punctured code otherwise.
inline SymCode build_mrd_code(std::uint64_t q, unsigned m, unsigned d, const Budgets& budgets = {}) {
  counting::validate_q(q);
  counting::validate_distance(m, d);
  if ((m - d) % 2 == 0) return build_schmidt_code(q, m, d);
  Budgets no_scan = budgets;
  no_scan.codewords = 0;
  return build_punctured_code(q, m, d, no_scan).code;
}

}  // namespace symrank
