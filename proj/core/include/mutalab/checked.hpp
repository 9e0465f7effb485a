#ifndef MUTALAB_CHECKED_HPP
#define MUTALAB_CHECKED_HPP

#include <cstdint>
#include <limits>

#include "mutalab/error.hpp"

namespace mutalab {

using Int = std::int64_t;

// Overflow is a hard error; exchange matrices never wrap.
namespace checked {

inline Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::IntegerOverflow, "addition overflow");
  return r;
}

inline Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorCode::IntegerOverflow, "subtraction overflow");
  return r;
}

inline Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::IntegerOverflow, "multiplication overflow");
  return r;
}

inline Int neg(Int a) {
  if (a == std::numeric_limits<Int>::min()) throw Error(ErrorCode::IntegerOverflow, "negation overflow");
  return -a;
}

inline Int abs(Int a) { return a < 0 ? neg(a) : a; }

}  // namespace checked

constexpr int sign(Int v) noexcept { return (v > 0) - (v < 0); }

}  // namespace mutalab

#endif  // MUTALAB_CHECKED_HPP
