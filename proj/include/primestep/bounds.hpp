#pragma once

#include <cstdint>
#include <string_view>

#include "primestep/bigint.hpp"
#include "primestep/checked.hpp"

namespace primestep {

// Which term produced r_plus: the seed, g'+1(r+_{s-1}, 1) or g'+2(r-_{s-1}, 1).
enum class PlusBranch { Seed, Plus1, Plus2 };

std::string_view to_string(PlusBranch b);

/// Upper bounds of the ranges [1, r_minus] and [1, r_plus] decided after `step`.
template <class Z>
struct BasicBounds {
  Z r_minus;
  Z r_plus;
  std::uint32_t step = 0;
  PlusBranch plus_branch = PlusBranch::Seed;

  bool operator==(const BasicBounds& o) const {
    return r_minus == o.r_minus && r_plus == o.r_plus && step == o.step;
  }
};

using RangeBounds = BasicBounds<Int>;
using BigRangeBounds = BasicBounds<BigInt>;

namespace detail {

inline Int add(Int a, Int b) { return checked_add(a, b); }
inline Int sub(Int a, Int b) { return checked_sub(a, b); }
inline Int mul(Int a, Int b) { return checked_mul(a, b); }
inline BigInt add(const BigInt& a, const BigInt& b) { return a + b; }
inline BigInt sub(const BigInt& a, const BigInt& b) { return a - b; }
inline BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }

template <class Z>
Z pow5(unsigned e) {
  Z r = 1;
  for (unsigned i = 0; i < e; ++i) r = mul(r, Z(5));
  return r;
}

}  // namespace detail

/// Seed of the n-parameterized family: r-_0 = 7n - 1, r+_0 = 5n - 1.
/// n = 1 gives the standard seed (6, 4).
template <class Z>
BasicBounds<Z> seed_bounds(const Z& n = Z(1)) {
  if (n < 1) throw DomainError("seed_bounds: n must be >= 1");
  using namespace detail;
  return {sub(mul(Z(7), n), Z(1)), sub(mul(Z(5), n), Z(1)), 0, PlusBranch::Seed};
}

/// r-_s = g'-(r+_{s-1}, 1);  r+_s = min(g'+1(r+_{s-1}, 1), g'+2(r-_{s-1}, 1)).
/// Ties are labelled Plus2.
template <class Z>
BasicBounds<Z> next_bounds(const BasicBounds<Z>& b) {
  using namespace detail;
  // g'(alpha, 1) with 6*alpha*1 -+ alpha -+ 1
  Z minus = add(sub(mul(Z(6), b.r_plus), b.r_plus), Z(1));
  Z plus1 = add(add(mul(Z(6), b.r_plus), b.r_plus), Z(1));
  Z plus2 = sub(sub(mul(Z(6), b.r_minus), b.r_minus), Z(1));
  BasicBounds<Z> out;
  out.step = b.step + 1;
  out.r_minus = minus;
  if (plus2 <= plus1) {
    out.r_plus = plus2;
    out.plus_branch = PlusBranch::Plus2;
  } else {
    out.r_plus = plus1;
    out.plus_branch = PlusBranch::Plus1;
  }
  return out;
}

/// Closed forms, s >= 1:
///   odd  s = 2k-1: r+ = 5^s (7n-1) - (1 + 5^s)/6,      r- = 5^(s+1) n + (1 - 5^(s+1))/6
///   even s = 2k:   r+ = 5^(s+1) n - (1 + 5^(s+1))/6,   r- = 5^s (7n-1) + (1 - 5^s)/6
template <class Z>
BasicBounds<Z> closed_form_bounds(std::uint32_t s, const Z& n = Z(1)) {
  using namespace detail;
  if (s < 1) throw DomainError("closed_form_bounds: s must be >= 1");
  if (n < 1) throw DomainError("closed_form_bounds: n must be >= 1");
  Z seven_n = sub(mul(Z(7), n), Z(1));
  Z a = pow5<Z>(s);
  Z b = pow5<Z>(s + 1);
  BasicBounds<Z> out;
  out.step = s;
  out.plus_branch = PlusBranch::Plus2;
  if (s % 2 == 1) {
    out.r_plus = sub(mul(a, seven_n), add(Z(1), a) / Z(6));
    out.r_minus = add(mul(b, n), sub(Z(1), b) / Z(6));
  } else {
    out.r_plus = sub(mul(b, n), add(Z(1), b) / Z(6));
    out.r_minus = add(mul(a, seven_n), sub(Z(1), a) / Z(6));
  }
  return out;
}

/// Doubling constraint 2(6r +- 1) - 2 <= 6r' +- 1 for both classes, with
/// strict growth. Bertrand-Chebyshev then puts a prime between consecutive
/// range tops.
template <class Z>
bool bertrand_check(const BasicBounds<Z>& b, const BasicBounds<Z>& b_next) {
  using namespace detail;
  if (!(b_next.r_minus > b.r_minus && b_next.r_plus > b.r_plus)) return false;
  Z top_minus = sub(mul(Z(6), b.r_minus), Z(1));
  Z top_plus = add(mul(Z(6), b.r_plus), Z(1));
  Z next_minus = sub(mul(Z(6), b_next.r_minus), Z(1));
  Z next_plus = add(mul(Z(6), b_next.r_plus), Z(1));
  return sub(mul(Z(2), top_minus), Z(2)) <= next_minus && sub(mul(Z(2), top_plus), Z(2)) <= next_plus;
}

/// 0 < r- - (sqrt(6 r+ + 1) + 1)/6 and 0 < r+ - (sqrt(6 r- - 1) + 1)/6,
/// compared exactly as (6r - 1)^2 > v.
template <class Z>
bool range_estimate_holds(const BasicBounds<Z>& b) {
  using namespace detail;
  auto one = [](const Z& r, const Z& v) {
    Z lhs = sub(mul(Z(6), r), Z(1));
    return lhs > 0 && mul(lhs, lhs) > v;
  };
  return one(b.r_minus, add(mul(Z(6), b.r_plus), Z(1))) && one(b.r_plus, sub(mul(Z(6), b.r_minus), Z(1)));
}

}  // namespace primestep
