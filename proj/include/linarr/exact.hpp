#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "linarr/error.hpp"

namespace linarr {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number in canonical reduced form (denominator > 0).
using ExactScalar = boost::multiprecision::cpp_rational;

inline ExactScalar ratio(const BigInt& numerator, const BigInt& denominator) {
  require(denominator != 0, "zero denominator");
  return ExactScalar(numerator, denominator);
}

inline BigInt numerator_of(const ExactScalar& x) {
  return boost::multiprecision::numerator(x);
}

inline BigInt denominator_of(const ExactScalar& x) {
  return boost::multiprecision::denominator(x);
}

/// "p/q", or just "p" when the value is an integer.
inline std::string to_string(const ExactScalar& x) {
  const BigInt den = denominator_of(x);
  if (den == 1) return numerator_of(x).str();
  return numerator_of(x).str() + "/" + den.str();
}

inline double to_double(const ExactScalar& x) {
  return x.convert_to<double>();
}

/// Parses "p", "-p" or "p/q".
inline ExactScalar parse_exact(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return ExactScalar(BigInt(text));
    return ratio(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const std::runtime_error&) {
    fail("not a rational number: '" + text + "'");
  }
}

/// C(a, b), zero when b < 0 or b > a.
inline BigInt binomial(std::int64_t a, std::int64_t b) {
  if (b < 0 || a < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  BigInt result = 1;
  for (std::int64_t i = 1; i <= b; ++i) {
    result *= a - b + i;
    result /= i;
  }
  return result;
}

/// C(n, 2) in 64-bit arithmetic.
constexpr std::uint64_t choose2(std::uint64_t n) {
  return n < 2 ? 0 : n * (n - 1) / 2;
}

}  // namespace linarr
