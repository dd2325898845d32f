#ifndef DOMVAL_COUNT_HPP
#define DOMVAL_COUNT_HPP

#include <cassert>
#include <cstdint>

#include "domval/errors.hpp"

namespace domval {

// Exact non-negative counter. All arithmetic on counts must go through the
// checked helpers below; overflow raises, never wraps.
using Count = std::uint64_t;

inline Count checked_add(Count a, Count b) {
  Count r;
  if (__builtin_add_overflow(a, b, &r))
    throw CountOverflowError("count addition exceeds 64 bits");
  return r;
}

inline Count checked_mul(Count a, Count b) {
  Count r;
  if (__builtin_mul_overflow(a, b, &r))
    throw CountOverflowError("count multiplication exceeds 64 bits");
  return r;
}

// Exact halving of a provably even product.
inline Count half_of_even(Count product) {
  assert(product % 2 == 0);
  return product / 2;
}

}  // namespace domval

#endif
