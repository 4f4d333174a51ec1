#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace shiftspace {

// All metric values are exact rationals; no floating point on any path that
// feeds a certified quantity.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// 2^e for e >= 0.
inline BigInt pow2_int(std::size_t e) { return BigInt(1) << e; }

// 2^-e as an exact rational.
inline Rational pow2_neg(std::size_t e) { return Rational(1, pow2_int(e)); }

// Serialized as "p" when integral, "p/q" otherwise. Never a decimal.
inline std::string rational_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace shiftspace
