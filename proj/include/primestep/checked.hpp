#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace primestep {

using Int = std::int64_t;

/// Precondition violated by a caller-supplied value.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Signed 64-bit overflow. Raised instead of wrapping.
class ArithmeticError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r))
    throw ArithmeticError("integer overflow in " + std::to_string(a) + " + " + std::to_string(b));
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r))
    throw ArithmeticError("integer overflow in " + std::to_string(a) + " - " + std::to_string(b));
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r))
    throw ArithmeticError("integer overflow in " + std::to_string(a) + " * " + std::to_string(b));
  return r;
}

/// Least non-negative residue of a modulo m (m > 0).
constexpr Int floor_mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

/// Floor division for m > 0.
constexpr Int floor_div(Int a, Int m) {
  Int q = a / m;
  return (a % m != 0 && a < 0) ? q - 1 : q;
}

}  // namespace primestep
