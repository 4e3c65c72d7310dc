#ifndef ACIMULT_CHECKED_HPP
#define ACIMULT_CHECKED_HPP

#include <stdexcept>

#include "acimult/degrees.hpp"

namespace acimult {

inline Int checked_mul(Int a, Int b) {
  Int out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("integer overflow in product");
  return out;
}

inline Int checked_add(Int a, Int b) {
  Int out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("integer overflow in sum");
  return out;
}

inline Int checked_pow(Int base, int exp) {
  Int out = 1;
  for (int k = 0; k < exp; ++k) out = checked_mul(out, base);
  return out;
}

inline Int factorial(int n) {
  Int out = 1;
  for (int k = 2; k <= n; ++k) out = checked_mul(out, k);
  return out;
}

}  // namespace acimult

#endif  // ACIMULT_CHECKED_HPP
