#pragma once

#include <cstdint>
#include <numeric>

#include "cmi/errors.hpp"

namespace cmi {

/// Exact integer used for exponents, counts and doubled areas. Every
/// arithmetic step that can grow a value goes through the checked helpers
/// below, so overflow surfaces as OverflowError instead of wrapping.
using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

inline Int checked_abs(Int a) {
  if (a == INT64_MIN) throw OverflowError("integer overflow in abs");
  return a < 0 ? -a : a;
}

inline Int gcd(Int a, Int b) { return std::gcd(checked_abs(a), checked_abs(b)); }

/// Floor/ceil division for b > 0.
inline Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

inline Int ceil_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && (a > 0)) ++q;
  return q;
}

}  // namespace cmi
