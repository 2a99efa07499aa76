#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "json.hpp"

namespace symrank {

using ExactCount = boost::multiprecision::cpp_int;
using ExactRatio = boost::multiprecision::cpp_rational;

inline ExactCount ipow(std::uint64_t base, std::uint64_t exp) {
  ExactCount result = 1;
  ExactCount b = base;
  while (exp != 0) {
    if (exp & 1U) result *= b;
    exp >>= 1U;
    if (exp != 0) b *= b;
  }
  return result;
}

inline std::string to_decimal(const ExactCount& x) { return x.str(); }

inline ExactCount count_from_decimal(const std::string& s) { return ExactCount(s); }

inline std::string to_fraction_string(const ExactRatio& r) {
  return to_decimal(numerator(r)) + "/" + to_decimal(denominator(r));
}

inline nlohmann::json to_json(const ExactRatio& r) {
  return {{"num", to_decimal(numerator(r))}, {"den", to_decimal(denominator(r))}};
}

inline ExactRatio ratio_from_json(const nlohmann::json& j) {
  const ExactCount num(j.at("num").get<std::string>());
  const ExactCount den(j.at("den").get<std::string>());
  if (den <= 0) throw std::invalid_argument("ratio denominator must be positive");
  return ExactRatio(num, den);
}

inline double to_double(const ExactRatio& r) { return r.convert_to<double>(); }

}  // namespace symrank
