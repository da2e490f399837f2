#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace asmkit {

using BigInt = boost::multiprecision::cpp_int;
/// Exact nonnegative count; kept as a signed big integer so differences stay exact.
using BigCount = BigInt;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt pow_big(BigInt base, unsigned exp) {
  BigInt out = 1;
  while (exp) {
    if (exp & 1u) out *= base;
    base *= base;
    exp >>= 1;
  }
  return out;
}

inline Rational pow_rational(Rational base, unsigned exp) {
  Rational out = 1;
  while (exp) {
    if (exp & 1u) out *= base;
    base *= base;
    exp >>= 1;
  }
  return out;
}

inline std::string to_decimal(BigInt const& v) { return v.str(); }

inline std::string to_decimal(Rational const& v) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(v) == 1) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

inline bool is_integer(Rational const& v) {
  return boost::multiprecision::denominator(v) == 1;
}

}  // namespace asmkit
