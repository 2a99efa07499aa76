#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "json.hpp"
#include "symrank/exact.hpp"
#include "symrank/gf.hpp"
#include "symrank/linalg.hpp"
#include "symrank/matspace.hpp"

namespace symrank {

/// An F_q-linear code in Sym_q(m), given by an independent basis.
class SymCode {
 public:
  /// `design_distance` is the distance the construction targets (0 when
  /// unknown); it sets the radius of the packing and covering certificates.
  SymCode(FieldPtr field, unsigned order, std::vector<SymMatrix> basis, unsigned design_distance = 0)
      : field_(std::move(field)), order_(order), basis_(std::move(basis)), design_distance_(design_distance) {
    if (!field_ || field_->level() != 1) throw std::invalid_argument("code field must be a base field F_q");
    if (order_ < 1) throw std::invalid_argument("matrix order must be >= 1");
    if (design_distance_ > order_) throw std::invalid_argument("design distance exceeds matrix order");
    const std::size_t n = upper_size(order_);
    std::vector<Elem> stacked;
    stacked.reserve(basis_.size() * n);
    for (const auto& b : basis_) {
      if (b.order() != order_) throw std::invalid_argument("basis matrix has wrong order");
      if (!b.field()->same_as(*field_)) throw std::invalid_argument("basis matrix over a different field");
      stacked.insert(stacked.end(), b.upper().begin(), b.upper().end());
    }
    if (linalg::rank(*field_, std::move(stacked), basis_.size(), n) != basis_.size()) {
      throw std::invalid_argument("code basis is linearly dependent");
    }
  }

  static SymCode full_space(const FieldPtr& field, unsigned order) {
    std::vector<SymMatrix> basis;
    for (unsigned i = 0; i < order; ++i) {
      for (unsigned j = i; j < order; ++j) {
        SymMatrix e(field, order);
        e.set(i, j, 1);
        basis.push_back(std::move(e));
      }
    }
    return SymCode(field, order, std::move(basis), 1);
  }

  const FieldPtr& field() const noexcept { return field_; }
  std::uint64_t q() const noexcept { return field_->size(); }
  unsigned order() const noexcept { return order_; }
  const std::vector<SymMatrix>& basis() const noexcept { return basis_; }
  std::uint64_t dimension() const noexcept { return basis_.size(); }
  ExactCount cardinality() const { return ipow(field_->size(), basis_.size()); }
  std::optional<unsigned> design_distance() const noexcept {
    return design_distance_ == 0 ? std::nullopt : std::optional<unsigned>(design_distance_);
  }
  bool is_full_space() const noexcept { return basis_.size() == upper_size(order_); }

 private:
  FieldPtr field_;
  unsigned order_;
  std::vector<SymMatrix> basis_;
  unsigned design_distance_;
};

// JSON: {"field": descriptor, "m": int, "d_design": int, "basis": [SymMatrix]}

inline nlohmann::json to_json(const SymCode& c) {
  nlohmann::json basis = nlohmann::json::array();
  for (const auto& b : c.basis()) basis.push_back(to_json(b));
  return {{"field", gf::to_json(*c.field())},
          {"m", c.order()},
          {"d_design", c.design_distance().value_or(0)},
          {"basis", basis}};
}

inline SymCode sym_code_from_json(const nlohmann::json& j) {
  auto field = gf::field_from_json(j.at("field"));
  if (field->level() != 1) throw std::invalid_argument("code field must be a base field F_q");
  const auto m = j.at("m").get<unsigned>();
  std::vector<SymMatrix> basis;
  for (const auto& b : j.at("basis")) {
    basis.push_back(sym_matrix_from_json(b, field));
    if (basis.back().order() != m) throw std::invalid_argument("basis matrix has wrong order");
  }
  const unsigned d = j.contains("d_design") && !j.at("d_design").is_null() ? j.at("d_design").get<unsigned>() : 0;
  return SymCode(field, m, std::move(basis), d);
}

}  // namespace symrank
