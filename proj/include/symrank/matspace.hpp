#pragma once

// The ambient space Sym_q(m): symmetric matrices stored by their upper
// triangle, rank and rank distance, exhaustive enumeration and the rank
// census used as a brute-force oracle for the sphere sizes.

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "symrank/detail/parallel.hpp"
#include "symrank/errors.hpp"
#include "symrank/exact.hpp"
#include "symrank/gf.hpp"
#include "symrank/linalg.hpp"

namespace symrank {

using gf::Elem;
using gf::FieldPtr;

inline constexpr std::uint64_t kDefaultAmbientBudget = std::uint64_t{1} << 25;

inline constexpr std::size_t upper_size(unsigned m) { return std::size_t{m} * (m + 1) / 2; }

/// Position of (i, j), i <= j, in the row-major upper triangle.
inline constexpr std::size_t upper_slot(unsigned i, unsigned j, unsigned m) {
  return std::size_t{i} * m - (i == 0 ? 0 : std::size_t{i} * (i - 1) / 2) + (j - i);
}

class SymMatrix {
 public:
  SymMatrix(FieldPtr field, unsigned order)
      : field_(std::move(field)), order_(order), upper_(upper_size(order), 0) {
    check_field();
  }

  SymMatrix(FieldPtr field, unsigned order, std::vector<Elem> upper)
      : field_(std::move(field)), order_(order), upper_(std::move(upper)) {
    check_field();
    if (upper_.size() != upper_size(order_)) throw std::invalid_argument("upper triangle has wrong length");
    for (Elem x : upper_) {
      if (!field_->contains(x)) throw std::invalid_argument("matrix entry outside field");
    }
  }

  static SymMatrix identity(FieldPtr field, unsigned order) {
    SymMatrix m(std::move(field), order);
    for (unsigned i = 0; i < order; ++i) m.set(i, i, 1);
    return m;
  }

  /// Throws unless `rows` is square and symmetric.
  static SymMatrix from_rows(FieldPtr field, const std::vector<std::vector<Elem>>& rows) {
    const auto m = static_cast<unsigned>(rows.size());
    SymMatrix out(std::move(field), m);
    for (unsigned i = 0; i < m; ++i) {
      if (rows[i].size() != m) throw std::invalid_argument("matrix is not square");
      for (unsigned j = 0; j < m; ++j) {
        if (rows[i][j] != rows[j][i]) throw std::invalid_argument("matrix is not symmetric");
      }
      for (unsigned j = i; j < m; ++j) out.set(i, j, rows[i][j]);
    }
    return out;
  }

  unsigned order() const noexcept { return order_; }
  const FieldPtr& field() const noexcept { return field_; }
  std::span<const Elem> upper() const noexcept { return upper_; }

  Elem operator()(unsigned i, unsigned j) const {
    if (i > j) std::swap(i, j);
    if (j >= order_) throw std::out_of_range("matrix index out of range");
    return upper_[upper_slot(i, j, order_)];
  }

  void set(unsigned i, unsigned j, Elem v) {
    if (i > j) std::swap(i, j);
    if (j >= order_) throw std::out_of_range("matrix index out of range");
    if (!field_->contains(v)) throw std::invalid_argument("matrix entry outside field");
    upper_[upper_slot(i, j, order_)] = v;
  }

  /// Row-major m x m view.
  std::vector<Elem> full() const {
    std::vector<Elem> out(std::size_t{order_} * order_);
    std::size_t k = 0;
    for (unsigned i = 0; i < order_; ++i) {
      for (unsigned j = i; j < order_; ++j, ++k) {
        out[std::size_t{i} * order_ + j] = upper_[k];
        out[std::size_t{j} * order_ + i] = upper_[k];
      }
    }
    return out;
  }

  bool is_zero() const noexcept {
    for (Elem x : upper_) {
      if (x != 0) return false;
    }
    return true;
  }

  SymMatrix& operator+=(const SymMatrix& o) {
    check_compatible(o);
    for (std::size_t k = 0; k < upper_.size(); ++k) upper_[k] = field_->add(upper_[k], o.upper_[k]);
    return *this;
  }
  SymMatrix& operator-=(const SymMatrix& o) {
    check_compatible(o);
    for (std::size_t k = 0; k < upper_.size(); ++k) upper_[k] = field_->sub(upper_[k], o.upper_[k]);
    return *this;
  }
  friend SymMatrix operator+(SymMatrix a, const SymMatrix& b) { return a += b; }
  friend SymMatrix operator-(SymMatrix a, const SymMatrix& b) { return a -= b; }

  SymMatrix scaled(Elem c) const {
    SymMatrix out = *this;
    for (Elem& x : out.upper_) x = field_->mul(c, x);
    return out;
  }

  bool operator==(const SymMatrix& o) const noexcept {
    return order_ == o.order_ && upper_ == o.upper_ && field_->same_as(*o.field_);
  }

  void check_compatible(const SymMatrix& o) const {
    if (order_ != o.order_) throw std::invalid_argument("matrix order mismatch");
    if (!field_->same_as(*o.field_)) throw std::invalid_argument("matrix field mismatch");
  }

 private:
  void check_field() const {
    if (!field_) throw std::invalid_argument("matrix needs a field");
    if (order_ < 1) throw std::invalid_argument("matrix order must be >= 1");
  }

  FieldPtr field_;
  unsigned order_;
  std::vector<Elem> upper_;
};

/// Rank of the symmetric matrix given by its upper triangle. `scratch` is
/// resized as needed and reused across calls.
inline unsigned rank_of_upper(const gf::Field& f, unsigned m, std::span<const Elem> upper,
                              std::vector<Elem>& scratch) {
  scratch.resize(std::size_t{m} * m);
  std::size_t k = 0;
  for (unsigned i = 0; i < m; ++i) {
    for (unsigned j = i; j < m; ++j, ++k) {
      scratch[std::size_t{i} * m + j] = upper[k];
      scratch[std::size_t{j} * m + i] = upper[k];
    }
  }
  return linalg::rank_in_place(f, scratch, m, m);
}

inline unsigned rank(const SymMatrix& a) {
  std::vector<Elem> scratch;
  return rank_of_upper(*a.field(), a.order(), a.upper(), scratch);
}

inline unsigned distance(const SymMatrix& a, const SymMatrix& b) { return rank(a - b); }

/// Deletes row k and column k.
inline SymMatrix puncture_matrix(const SymMatrix& a, unsigned k) {
  const unsigned m = a.order();
  if (m < 2) throw std::invalid_argument("cannot puncture a 1x1 matrix");
  if (k >= m) throw std::out_of_range("puncture index out of range");
  SymMatrix out(a.field(), m - 1);
  for (unsigned i = 0, oi = 0; i < m; ++i) {
    if (i == k) continue;
    for (unsigned j = i, oj = oi; j < m; ++j) {
      if (j == k) continue;
      out.set(oi, oj, a(i, j));
      ++oj;
    }
    ++oi;
  }
  return out;
}

/// Pᵀ A P for a row-major m x m matrix P over the same field.
inline SymMatrix congruent(const SymMatrix& a, std::span<const Elem> p) {
  const unsigned m = a.order();
  const gf::Field& f = *a.field();
  if (p.size() != std::size_t{m} * m) throw std::invalid_argument("congruence matrix has wrong size");
  const auto full = a.full();
  std::vector<Elem> ap(std::size_t{m} * m, 0);  // A P
  for (unsigned i = 0; i < m; ++i) {
    for (unsigned j = 0; j < m; ++j) {
      Elem acc = 0;
      for (unsigned k = 0; k < m; ++k) acc = f.add(acc, f.mul(full[i * m + k], p[k * m + j]));
      ap[i * m + j] = acc;
    }
  }
  SymMatrix out(a.field(), m);
  for (unsigned i = 0; i < m; ++i) {
    for (unsigned j = i; j < m; ++j) {
      Elem acc = 0;
      for (unsigned k = 0; k < m; ++k) acc = f.add(acc, f.mul(p[k * m + i], ap[k * m + j]));
      out.set(i, j, acc);
    }
  }
  return out;
}

/// q^n, saturated at UINT64_MAX.
inline std::uint64_t saturating_pow(std::uint64_t q, std::uint64_t n) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / q) return std::numeric_limits<std::uint64_t>::max();
    r *= q;
  }
  return r;
}

/// Index <-> matrix bijection for Sym_q(m), ordered lexicographically over
/// the upper-triangle entries (upper[0] most significant).
class SymSpace {
 public:
  SymSpace(FieldPtr field, unsigned order, std::uint64_t budget = kDefaultAmbientBudget)
      : field_(std::move(field)), order_(order), entries_(upper_size(order)) {
    if (!field_ || field_->level() != 1) throw std::invalid_argument("Sym_q(m) needs a base field F_q");
    if (order_ < 1) throw std::invalid_argument("matrix order must be >= 1");
    size_ = saturating_pow(field_->size(), entries_);
    if (size_ > budget) throw BudgetExceeded("Sym_" + std::to_string(field_->size()) + "(" +
                                             std::to_string(order_) + ")", size_, budget);
  }

  const FieldPtr& field() const noexcept { return field_; }
  unsigned order() const noexcept { return order_; }
  std::size_t entries() const noexcept { return entries_; }
  std::uint64_t size() const noexcept { return size_; }

  void decode(std::uint64_t index, std::span<Elem> upper) const {
    const std::uint64_t q = field_->size();
    for (std::size_t k = entries_; k-- > 0;) {
      upper[k] = static_cast<Elem>(index % q);
      index /= q;
    }
  }

  std::uint64_t index_of(std::span<const Elem> upper) const {
    std::uint64_t idx = 0;
    for (Elem x : upper) idx = idx * field_->size() + x;
    return idx;
  }

  std::uint64_t index_of(const SymMatrix& a) const {
    if (a.order() != order_ || !a.field()->same_as(*field_)) throw std::invalid_argument("matrix not in this space");
    return index_of(a.upper());
  }

  SymMatrix at(std::uint64_t index) const {
    if (index >= size_) throw std::out_of_range("matrix index out of range");
    std::vector<Elem> upper(entries_);
    decode(index, upper);
    return SymMatrix(field_, order_, std::move(upper));
  }

 private:
  FieldPtr field_;
  unsigned order_;
  std::size_t entries_;
  std::uint64_t size_ = 0;
};

inline std::vector<SymMatrix> enumerate_sym(const FieldPtr& field, unsigned m,
                                            std::uint64_t budget = kDefaultAmbientBudget) {
  const SymSpace space(field, m, budget);
  std::vector<SymMatrix> out;
  out.reserve(space.size());
  for (std::uint64_t i = 0; i < space.size(); ++i) out.push_back(space.at(i));
  return out;
}

/// rank_table[i] = rank(space.at(i)).
inline std::vector<std::uint8_t> rank_table(const SymSpace& space, unsigned workers = 0) {
  std::vector<std::uint8_t> table(space.size());
  detail::parallel_for(space.size(), workers, [&](std::uint64_t begin, std::uint64_t end, unsigned) {
    std::vector<Elem> upper(space.entries());
    std::vector<Elem> scratch;
    for (std::uint64_t i = begin; i < end; ++i) {
      space.decode(i, upper);
      table[i] = static_cast<std::uint8_t>(rank_of_upper(*space.field(), space.order(), upper, scratch));
    }
  });
  return table;
}

struct RankProfile {
  unsigned order = 0;
  std::uint64_t q = 0;
  std::vector<ExactCount> counts;  // counts[t] = #{M : rank M = t}
};

inline RankProfile rank_census(const FieldPtr& field, unsigned m, std::uint64_t budget = kDefaultAmbientBudget,
                               unsigned workers = 0) {
  const SymSpace space(field, m, budget);
  const unsigned w = detail::resolve_workers(workers, space.size());
  std::vector<std::vector<std::uint64_t>> local(w, std::vector<std::uint64_t>(m + 1, 0));
  detail::parallel_for(space.size(), w, [&](std::uint64_t begin, std::uint64_t end, unsigned worker) {
    std::vector<Elem> upper(space.entries());
    std::vector<Elem> scratch;
    auto& counts = local[worker];
    for (std::uint64_t i = begin; i < end; ++i) {
      space.decode(i, upper);
      ++counts[rank_of_upper(*field, m, upper, scratch)];
    }
  });
  RankProfile profile{m, field->size(), std::vector<ExactCount>(m + 1, 0)};
  for (const auto& counts : local) {
    for (unsigned t = 0; t <= m; ++t) profile.counts[t] += counts[t];
  }
  return profile;
}

// JSON: {"m": int, "upper": [[base-p digits of each entry], ...]}

inline nlohmann::json to_json(const SymMatrix& a) {
  nlohmann::json upper = nlohmann::json::array();
  for (Elem x : a.upper()) upper.push_back(a.field()->prime_digits(x));
  return {{"m", a.order()}, {"upper", upper}};
}

inline SymMatrix sym_matrix_from_json(const nlohmann::json& j, const FieldPtr& field) {
  const auto m = j.at("m").get<unsigned>();
  const auto& arr = j.at("upper");
  if (!arr.is_array() || arr.size() != upper_size(m)) throw std::invalid_argument("upper triangle has wrong length");
  std::vector<Elem> upper;
  upper.reserve(arr.size());
  for (const auto& entry : arr) upper.push_back(field->from_prime_digits(entry.get<std::vector<unsigned>>()));
  return SymMatrix(field, m, std::move(upper));
}

}  // namespace symrank
