#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "symrank/gf.hpp"

namespace symrank::linalg {

using gf::Elem;

/// Row-echelon rank of a rows x cols row-major matrix. Destroys `a`.
inline unsigned rank_in_place(const gf::Field& f, std::span<Elem> a, std::size_t rows, std::size_t cols) {
  if (a.size() < rows * cols) throw std::invalid_argument("matrix buffer too small");
  unsigned rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot * cols + col] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t c = col; c < cols; ++c) std::swap(a[pivot * cols + c], a[rank * cols + c]);
    }
    const Elem inv = f.inv(a[rank * cols + col]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const Elem lead = a[r * cols + col];
      if (lead == 0) continue;
      const Elem factor = f.mul(lead, inv);
      for (std::size_t c = col; c < cols; ++c) {
        a[r * cols + c] = f.sub(a[r * cols + c], f.mul(factor, a[rank * cols + c]));
      }
    }
    ++rank;
  }
  return rank;
}

inline unsigned rank(const gf::Field& f, std::vector<Elem> a, std::size_t rows, std::size_t cols) {
  return rank_in_place(f, a, rows, cols);
}

/// Indices of a maximal independent subset of the rows, chosen greedily in
/// order. Rows have length `cols`.
inline std::vector<std::size_t> independent_rows(const gf::Field& f, std::span<const Elem> a,
                                                 std::size_t rows, std::size_t cols) {
  std::vector<std::size_t> kept;
  std::vector<Elem> acc;
  for (std::size_t r = 0; r < rows; ++r) {
    std::vector<Elem> trial = acc;
    trial.insert(trial.end(), a.begin() + static_cast<std::ptrdiff_t>(r * cols),
                 a.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols));
    if (rank(f, trial, kept.size() + 1, cols) == kept.size() + 1) {
      kept.push_back(r);
      acc = std::move(trial);
    }
  }
  return kept;
}

}  // namespace symrank::linalg
