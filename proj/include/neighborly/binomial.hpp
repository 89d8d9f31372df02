#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include "neighborly/error.hpp"

namespace neighborly {

/// Wide signed accumulator for exact intermediate arithmetic.
__extension__ typedef __int128 Wide;

namespace detail {

inline Wide checked_mul(Wide a, Wide b) {
  Wide r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("integer overflow in product");
  return r;
}

inline Wide checked_add(Wide a, Wide b) {
  Wide r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("integer overflow in sum");
  return r;
}

inline std::int64_t narrow(Wide v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw ArithmeticOverflow("exact result does not fit in 64 bits");
  return static_cast<std::int64_t>(v);
}

}  // namespace detail

/// Exact binomial coefficient with C(a, b) = 0 for b < 0 or b > a, and
/// C(a, 0) = 1. Negative `a` is outside every formula used here and yields 0.
inline Wide binomial_wide(std::int64_t a, std::int64_t b) {
  if (b < 0 || a < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  Wide r = 1;
  // r * (a - b + i) / i stays integral at every step
  for (std::int64_t i = 1; i <= b; ++i) r = detail::checked_mul(r, a - b + i) / i;
  return r;
}

inline std::int64_t binomial(std::int64_t a, std::int64_t b) { return detail::narrow(binomial_wide(a, b)); }

}  // namespace neighborly
