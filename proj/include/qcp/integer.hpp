#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "qcp/errors.hpp"

namespace qcp {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Checked int64 arithmetic. Every matrix computation in the library runs
// through these (or the BigInt overloads below), so wraparound is impossible.
inline std::int64_t exact_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("int64 overflow in addition");
  return r;
}

inline std::int64_t exact_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("int64 overflow in subtraction");
  return r;
}

inline std::int64_t exact_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("int64 overflow in multiplication");
  return r;
}

inline std::int64_t exact_neg(std::int64_t a) { return exact_sub(0, a); }

inline std::int64_t exact_abs(std::int64_t a) { return a < 0 ? exact_neg(a) : a; }

// Truncating division; b must be nonzero.
inline std::int64_t exact_div(std::int64_t a, std::int64_t b) {
  if (a == std::numeric_limits<std::int64_t>::min() && b == -1)
    throw OverflowError("int64 overflow in division");
  return a / b;
}

inline BigInt exact_add(const BigInt& a, const BigInt& b) { return a + b; }
inline BigInt exact_sub(const BigInt& a, const BigInt& b) { return a - b; }
inline BigInt exact_mul(const BigInt& a, const BigInt& b) { return a * b; }
inline BigInt exact_neg(const BigInt& a) { return -a; }
inline BigInt exact_abs(const BigInt& a) { return abs(a); }
inline BigInt exact_div(const BigInt& a, const BigInt& b) { return a / b; }

inline std::uint64_t checked_mul_u64(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("uint64 overflow in multiplication");
  return r;
}

inline std::uint64_t checked_add_u64(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("uint64 overflow in addition");
  return r;
}

inline std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

inline std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return checked_mul_u64(a / gcd_u64(a, b), b);
}

// |a| as unsigned; safe for INT64_MIN.
inline std::uint64_t magnitude(std::int64_t a) {
  return a < 0 ? std::uint64_t{0} - static_cast<std::uint64_t>(a) : static_cast<std::uint64_t>(a);
}

inline std::uint64_t to_u64(const BigInt& v) {
  if (v < 0 || v > std::numeric_limits<std::uint64_t>::max())
    throw OverflowError("value " + v.str() + " does not fit in uint64");
  return v.convert_to<std::uint64_t>();
}

// Nonnegative residue of v modulo q (q > 0).
inline std::uint64_t mod_u64(std::int64_t v, std::uint64_t q) {
  if (v >= 0) return static_cast<std::uint64_t>(v) % q;
  std::uint64_t r = magnitude(v) % q;
  return r == 0 ? 0 : q - r;
}

}  // namespace qcp
