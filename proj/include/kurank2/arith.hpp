#pragma once

// Integer width guarantee: lattice coordinates are int64. Every derived
// quantity (cross, dot, norm, pairings) is computed in __int128 with
// overflow-checked operations, so results are exact whenever coordinates
// satisfy |a|,|b| <= 2^62; anything that would wrap throws
// ErrorCode::Overflow instead.

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "kurank2/error.hpp"

namespace kurank2 {

using Int = std::int64_t;
using Wide = __int128;
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Wide add(Wide x, Wide y) {
  Wide r;
  if (__builtin_add_overflow(x, y, &r)) fail(ErrorCode::Overflow, "overflow in addition");
  return r;
}

inline Wide sub(Wide x, Wide y) {
  Wide r;
  if (__builtin_sub_overflow(x, y, &r)) fail(ErrorCode::Overflow, "overflow in subtraction");
  return r;
}

inline Wide mul(Wide x, Wide y) {
  Wide r;
  if (__builtin_mul_overflow(x, y, &r)) fail(ErrorCode::Overflow, "overflow in multiplication");
  return r;
}

inline Int narrow(Wide x) {
  if (x > INT64_MAX || x < INT64_MIN) fail(ErrorCode::Overflow, "value does not fit in 64 bits");
  return static_cast<Int>(x);
}

inline Int add64(Int x, Int y) {
  Int r;
  if (__builtin_add_overflow(x, y, &r)) fail(ErrorCode::Overflow, "overflow in addition");
  return r;
}

inline Int sub64(Int x, Int y) {
  Int r;
  if (__builtin_sub_overflow(x, y, &r)) fail(ErrorCode::Overflow, "overflow in subtraction");
  return r;
}

inline Int mul64(Int x, Int y) {
  Int r;
  if (__builtin_mul_overflow(x, y, &r)) fail(ErrorCode::Overflow, "overflow in multiplication");
  return r;
}

inline Int neg64(Int x) { return sub64(0, x); }

std::string to_string(Wide x);
BigInt to_big(Wide x);
std::string to_string(const Rational& q);

// floor division for a possibly negative numerator
inline Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace kurank2
