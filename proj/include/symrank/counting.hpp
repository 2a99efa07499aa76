#pragma once

// Closed-form counts and bounds for symmetric rank-metric codes, all exact.
//
// Exponents that may be half-integral in the printed formulas are carried in
// half-units ("twice the exponent"); every case reachable under its parity
// conditions has an even value, which is asserted before evaluation.

#include <cstdint>
#include <stdexcept>
#include <string>

#include "symrank/exact.hpp"
#include "symrank/gf.hpp"

namespace symrank::counting {

struct BoundPair {
  ExactRatio lower;
  ExactRatio upper;

  bool contains(const ExactRatio& x) const { return lower <= x && x <= upper; }
};

enum class QuasiPerfectVerdict { ExistsTrivial, ExistsOddOrders, None };

inline std::string to_string(QuasiPerfectVerdict v) {
  switch (v) {
    case QuasiPerfectVerdict::ExistsTrivial: return "EXISTS_TRIVIAL";
    case QuasiPerfectVerdict::ExistsOddOrders: return "EXISTS_ODD_ORDERS";
    case QuasiPerfectVerdict::None: return "NONE";
  }
  return "NONE";
}

inline void validate_q(std::uint64_t q) {
  if (!gf::prime_power(q)) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
}

inline void validate_order(unsigned m) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
}

inline void validate_distance(unsigned m, unsigned d) {
  validate_order(m);
  if (d < 1 || d > m) {
    throw std::invalid_argument("d = " + std::to_string(d) + " outside [1, " + std::to_string(m) + "]");
  }
}

inline unsigned packing_radius(unsigned d) { return (d - 1) / 2; }

inline std::uint64_t ambient_dimension(unsigned m) { return std::uint64_t{m} * (m + 1) / 2; }

/// |Sym_q(m)| = q^{m(m+1)/2}.
inline ExactCount ambient_size(std::uint64_t q, unsigned m) {
  validate_q(q);
  return ipow(q, ambient_dimension(m));
}

/// q^{twice_exponent / 2}; the exponent must be integral.
inline ExactRatio q_power_half(std::uint64_t q, long long twice_exponent) {
  if (twice_exponent % 2 != 0) throw std::logic_error("non-integral exponent reached in a bound formula");
  const long long e = twice_exponent / 2;
  if (e >= 0) return ExactRatio(ipow(q, static_cast<std::uint64_t>(e)));
  return ExactRatio(ExactCount(1), ipow(q, static_cast<std::uint64_t>(-e)));
}

/// Number of symmetric m x m matrices of rank exactly t:
///   prod_{s=1}^{floor(t/2)} q^{2s}/(q^{2s}-1) * prod_{s=0}^{t-1} (q^{m-s}-1).
inline ExactCount sphere_size(std::uint64_t q, unsigned m, unsigned t) {
  validate_q(q);
  validate_order(m);
  if (t > m) throw std::invalid_argument("t = " + std::to_string(t) + " exceeds m = " + std::to_string(m));
  ExactCount num = 1;
  ExactCount den = 1;
  for (unsigned s = 1; s <= t / 2; ++s) {
    const ExactCount q2s = ipow(q, 2ULL * s);
    num *= q2s;
    den *= q2s - 1;
  }
  for (unsigned s = 0; s < t; ++s) num *= ipow(q, m - s) - 1;
  if (num % den != 0) throw std::logic_error("sphere size is not an integer");
  return num / den;
}

inline ExactCount ball_size(std::uint64_t q, unsigned m, unsigned t) {
  validate_q(q);
  validate_order(m);
  if (t > m) throw std::invalid_argument("t = " + std::to_string(t) + " exceeds m = " + std::to_string(m));
  ExactCount sum = 0;
  for (unsigned i = 0; i <= t; ++i) sum += sphere_size(q, m, i);
  return sum;
}

/// B_2 = (-q^m + q^{2m+1} - q^{m+1} + q^2) / (q^2 - 1).
inline ExactCount ball2_closed_form(std::uint64_t q, unsigned m) {
  validate_q(q);
  if (m < 2) throw std::invalid_argument("closed-form B_2 needs m >= 2");
  const ExactCount num = -ipow(q, m) + ipow(q, 2ULL * m + 1) - ipow(q, m + 1ULL) + ipow(q, 2);
  const ExactCount den = ipow(q, 2) - 1;
  if (num % den != 0) throw std::logic_error("closed-form B_2 is not an integer");
  return num / den;
}

namespace detail {

inline void check_index(unsigned m, unsigned i) {
  validate_order(m);
  if (i > m) throw std::invalid_argument("i = " + std::to_string(i) + " exceeds m = " + std::to_string(m));
}

// (m-1)i - i(i-1)/2 and mi - i(i-1)/2 + floor(i/2)
inline long long volume_lower_exp(unsigned m, unsigned i) {
  return static_cast<long long>(m - 1) * i - static_cast<long long>(i) * (i - 1) / 2;
}
inline long long volume_upper_exp(unsigned m, unsigned i) {
  return static_cast<long long>(m) * i - static_cast<long long>(i) * (i - 1) / 2 + i / 2;
}

}  // namespace detail

/// q^{(m-1)i - i(i-1)/2} < S_i <= q^{mi - i(i-1)/2 + floor(i/2)} (strict only for i >= 1).
inline BoundPair sphere_bounds(std::uint64_t q, unsigned m, unsigned i) {
  validate_q(q);
  detail::check_index(m, i);
  if (i == 0) return {ExactRatio(1), ExactRatio(1)};
  return {q_power_half(q, 2 * detail::volume_lower_exp(m, i)), q_power_half(q, 2 * detail::volume_upper_exp(m, i))};
}

/// q^{(m-1)i - i(i-1)/2} <= B_i <= q^{mi - i(i-1)/2 + floor(i/2) + 1}.
inline BoundPair ball_bounds(std::uint64_t q, unsigned m, unsigned i) {
  validate_q(q);
  detail::check_index(m, i);
  return {q_power_half(q, 2 * detail::volume_lower_exp(m, i)),
          q_power_half(q, 2 * (detail::volume_upper_exp(m, i) + 1))};
}

/// Largest F_q-dimension of a code in Sym_q(m) with minimum distance d.
inline std::uint64_t singleton_max_dim(unsigned m, unsigned d) {
  validate_distance(m, d);
  if ((m - d) % 2 == 0) return std::uint64_t{m} * (m - d + 2) / 2;
  return std::uint64_t{m + 1} * (m - d + 1) / 2;
}

/// floor(q^{(m^2+m)/2} / B_t), t = floor((d-1)/2).
inline ExactCount sphere_packing_max_size(std::uint64_t q, unsigned m, unsigned d) {
  validate_q(q);
  validate_distance(m, d);
  return ambient_size(q, m) / ball_size(q, m, packing_radius(d));
}

/// Exact covering density of a code of dimension k and minimum distance d.
inline ExactRatio density_of(std::uint64_t q, unsigned m, unsigned d, std::uint64_t k) {
  validate_q(q);
  validate_distance(m, d);
  return ExactRatio(ipow(q, k) * ball_size(q, m, packing_radius(d)), ambient_size(q, m));
}

/// Density any symmetric MRD code with these parameters has, from the
/// Singleton-bound cardinality.
inline ExactRatio mrd_density(std::uint64_t q, unsigned m, unsigned d) {
  return density_of(q, m, d, singleton_max_dim(m, d));
}

namespace detail {

// Twice the exponent of the generic upper bound, one case per (m, d) parity.
inline long long corollary_upper_twice(unsigned m, unsigned d) {
  const long long t = packing_radius(d);
  const long long tri = t * (t - 1);  // twice t(t-1)/2
  const long long half_t = t / 2;
  const bool m_even = m % 2 == 0;
  const bool d_odd = d == 2 * t + 1;
  if (m_even && d_odd) return -2 * t - tri + 2 * half_t + 2;
  if (!m_even && !d_odd) return -2 * t - tri + 2 * half_t - m + 1;
  if (!m_even && d_odd) return -tri + 2 * half_t + 2;
  return -tri + 2 * half_t - m + 2;
}

inline long long mrd_lower_twice(unsigned m, unsigned d) {
  const long long t = packing_radius(d);
  const long long tri = t * (t - 1);
  const bool m_even = m % 2 == 0;
  const bool d_odd = d == 2 * t + 1;
  if (m_even && d_odd) return -4 * t - tri;
  if (!m_even && !d_odd) return -4 * t - tri - m - 1;
  if (!m_even && d_odd) return -2 * t - tri;
  return -2 * t - tri - m;
}

// Refined t = 2 bounds: (sum of signed q-powers) / (q^2 - 1).
inline ExactRatio t2_bound(std::uint64_t q, unsigned m, unsigned d) {
  const long long mm = m;
  long long e[4];
  if (d == 5 && m % 2 == 1) {
    e[0] = -2 * mm, e[1] = 2, e[2] = -2 * mm + 2, e[3] = 4 - 4 * mm;
  } else if (d == 5) {
    e[0] = -2 * mm - 4, e[1] = -2, e[2] = -2 * mm - 2, e[3] = -4 * mm;
  } else if (m % 2 == 0) {
    e[0] = -3 * mm, e[1] = -mm + 2, e[2] = -3 * mm + 2, e[3] = -5 * mm + 4;
  } else {
    e[0] = -3 * mm - 5, e[1] = -mm - 3, e[2] = -3 * mm - 3, e[3] = -5 * mm - 1;
  }
  const ExactRatio sum = -q_power_half(q, e[0]) + q_power_half(q, e[1]) - q_power_half(q, e[2]) +
                         q_power_half(q, e[3]);
  return sum / ExactRatio(ipow(q, 2) - 1);
}

}  // namespace detail

/// Tightest stated upper bound on the covering density of any code in
/// Sym_q(m) with minimum distance d. For t in {1, 2} these are the refined
/// values, attained by MRD codes; otherwise the parity-case power of q,
/// capped at 1 by the sphere-packing bound.
inline ExactRatio density_upper_bound(std::uint64_t q, unsigned m, unsigned d) {
  validate_q(q);
  validate_distance(m, d);
  const unsigned t = packing_radius(d);
  if (t == 1) {
    if (d == 3) return m % 2 == 1 ? ExactRatio(1) : q_power_half(q, -2);
    return m % 2 == 0 ? q_power_half(q, -static_cast<long long>(m)) : q_power_half(q, -static_cast<long long>(m) - 3);
  }
  if (t == 2) return detail::t2_bound(q, m, d);
  const ExactRatio generic = q_power_half(q, detail::corollary_upper_twice(m, d));
  return generic < 1 ? generic : ExactRatio(1);
}

/// Two-sided power-of-q bounds on the density of a symmetric MRD code.
inline BoundPair mrd_density_bounds(std::uint64_t q, unsigned m, unsigned d) {
  validate_q(q);
  validate_distance(m, d);
  return {q_power_half(q, detail::mrd_lower_twice(m, d)), q_power_half(q, detail::corollary_upper_twice(m, d))};
}

/// Whether a family of codes with fixed minimum distance d can have
/// covering densities tending to 1.
inline QuasiPerfectVerdict quasi_perfect_verdict(unsigned d) {
  if (d < 1) throw std::invalid_argument("d must be >= 1");
  if (d == 1) return QuasiPerfectVerdict::ExistsTrivial;
  if (d == 3) return QuasiPerfectVerdict::ExistsOddOrders;
  return QuasiPerfectVerdict::None;
}

}  // namespace symrank::counting
