#include <doctest.h>

#include "primestep/bounds.hpp"

using namespace primestep;

TEST_CASE("seed and first steps") {
  auto b0 = seed_bounds<Int>();
  CHECK(b0.r_minus == 6);
  CHECK(b0.r_plus == 4);
  auto b1 = next_bounds(b0);
  CHECK(b1.r_minus == 21);
  CHECK(b1.r_plus == 29);
  CHECK(b1.step == 1);
  auto b2 = next_bounds(b1);
  CHECK(b2.r_minus == 146);
  CHECK(b2.r_plus == 104);
  CHECK(b2.plus_branch == PlusBranch::Plus2);
}

TEST_CASE("closed form examples") {
  auto c1 = closed_form_bounds<Int>(1);
  CHECK(c1.r_minus == 21);
  CHECK(c1.r_plus == 29);
  auto c2 = closed_form_bounds<Int>(2);
  CHECK(c2.r_minus == 146);
  CHECK(c2.r_plus == 104);
  auto c3 = closed_form_bounds<Int>(3);
  CHECK(c3.r_minus == 521);
  CHECK(c3.r_plus == 729);
  CHECK_THROWS_AS(closed_form_bounds<Int>(0), DomainError);
  CHECK_THROWS_AS(seed_bounds<Int>(0), DomainError);
}

TEST_CASE("closed form equals the recurrence for s <= 15, n <= 5") {
  for (Int n = 1; n <= 5; ++n) {
    auto b = seed_bounds<Int>(n);
    for (std::uint32_t s = 1; s <= 15; ++s) {
      b = next_bounds(b);
      CHECK(closed_form_bounds<Int>(s, n) == b);
    }
  }
}

TEST_CASE("bignum agrees with checked 64-bit and goes further") {
  auto a = seed_bounds<Int>();
  auto b = seed_bounds<BigInt>();
  for (std::uint32_t s = 1; s <= 20; ++s) {
    a = next_bounds(a);
    b = next_bounds(b);
    CHECK(BigInt(a.r_minus) == b.r_minus);
    CHECK(BigInt(a.r_plus) == b.r_plus);
  }
  for (std::uint32_t s = 21; s <= 60; ++s) b = next_bounds(b);
  CHECK(closed_form_bounds<BigInt>(60) == b);
  auto c = seed_bounds<Int>();
  CHECK_THROWS_AS(
      [&] {
        for (int s = 0; s < 40; ++s) c = next_bounds(c);
      }(),
      ArithmeticError);
}

TEST_CASE("bertrand check") {
  RangeBounds b0{6, 4, 0};
  RangeBounds b1{21, 29, 1};
  RangeBounds b2{146, 104, 2};
  CHECK(bertrand_check(b0, b1));
  CHECK(bertrand_check(b1, b2));
  CHECK_FALSE(bertrand_check(b1, b1));
  auto b = seed_bounds<Int>();
  for (int s = 1; s <= 12; ++s) {
    auto n = next_bounds(b);
    CHECK(bertrand_check(b, n));
    b = n;
  }
}

TEST_CASE("range estimate at every step") {
  auto b = seed_bounds<BigInt>();
  CHECK(range_estimate_holds(b));
  for (int s = 1; s <= 40; ++s) {
    b = next_bounds(b);
    CHECK(range_estimate_holds(b));
  }
  CHECK_FALSE(range_estimate_holds(RangeBounds{1, 10, 0}));
}

TEST_CASE("odd steps tie between the two plus branches") {
  auto c = seed_bounds<Int>();
  for (std::uint32_t s = 1; s <= 20; ++s) {
    Int plus1 = 7 * c.r_plus + 1;
    Int plus2 = 5 * c.r_minus - 1;
    auto n = next_bounds(c);
    CHECK(n.r_plus == std::min(plus1, plus2));
    CHECK(n.plus_branch == PlusBranch::Plus2);
    if (s % 2 == 1) CHECK(plus1 == plus2);
    c = n;
  }
}
