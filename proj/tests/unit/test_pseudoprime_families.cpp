#include <doctest.h>

#include <algorithm>
#include <set>

#include "primestep/pseudoprime_families.hpp"
#include "support.hpp"

using namespace primestep;

namespace {
constexpr FamilyKind kKinds[] = {FamilyKind::MinusAlpha, FamilyKind::MinusBeta, FamilyKind::Plus1Alpha,
                                 FamilyKind::Plus2Alpha};

std::vector<Int> range(Int lo, Int hi) {
  std::vector<Int> v;
  for (Int g = lo; g <= hi; ++g) v.push_back(g);
  return v;
}

std::vector<Int> without(std::vector<Int> v, std::initializer_list<Int> drop) {
  for (Int d : drop) v.erase(std::remove(v.begin(), v.end(), d), v.end());
  return v;
}
}  // namespace

TEST_CASE("family examples") {
  auto p2 = family(FamilyKind::Plus2Alpha, 1);
  CHECK(p2.modulus == 5);
  CHECK(p2.composite_residue == 4);
  CHECK_FALSE(p2.missing.has_value());
  CHECK(p2.chi_max == 4);

  auto p1 = family(FamilyKind::Plus1Alpha, 1);
  CHECK(p1.modulus == 7);
  CHECK(p1.composite_residue == 1);
  CHECK(p1.missing == 1);
  CHECK(p1.chi_max == 6);

  auto m = family(FamilyKind::MinusAlpha, 1);
  CHECK(m.modulus == 7);
  CHECK(m.composite_residue == 6);
  CHECK_FALSE(m.missing.has_value());

  auto mb = family(FamilyKind::MinusBeta, 3);
  CHECK(mb.modulus == 17);
  CHECK(mb.chi_max == 16);
  CHECK(mb.missing == 3);
  CHECK(mb.target() == ResidueClass::OMinus);
  CHECK(p1.target() == ResidueClass::OPlus);
  CHECK_THROWS_AS(family(FamilyKind::MinusAlpha, 0), DomainError);
}

TEST_CASE("spurious ranges") {
  for (Int a = 1; a <= 10; ++a) {
    CHECK(family(FamilyKind::MinusAlpha, a).spurious == Interval{-a + 1, 0});
    CHECK(family(FamilyKind::MinusBeta, a).spurious == Interval{-5 * a + 2, 0});
    CHECK(family(FamilyKind::Plus1Alpha, a).spurious == Interval{-5 * a, 0});
    CHECK(family(FamilyKind::Plus2Alpha, a).spurious == Interval{-a + 1, 0});
  }
}

TEST_CASE("members examples") {
  CHECK(members(family(FamilyKind::Plus2Alpha, 1), 10) == std::vector<Int>{1, 2, 3, 5, 6, 7, 8, 10});
  CHECK(members(family(FamilyKind::Plus1Alpha, 1), 10) == std::vector<Int>{1, 2, 3, 4, 5, 6, 7, 9, 10});
  CHECK(members(family(FamilyKind::MinusAlpha, 1), 6) == std::vector<Int>{1, 2, 3, 4, 5});
  CHECK_THROWS_AS(members(family(FamilyKind::MinusAlpha, 1), 0), DomainError);
}

TEST_CASE("to_residue_set examples") {
  auto a = to_residue_set(family(FamilyKind::Plus2Alpha, 1));
  CHECK(a.modulus() == 5);
  CHECK(a.allowed() == std::vector<Int>{0, 1, 2, 3});
  CHECK(a.exceptions_add().empty());

  auto b = to_residue_set(family(FamilyKind::Plus1Alpha, 2));
  CHECK(b.modulus() == 13);
  CHECK(b.allowed() == without(range(0, 12), {2}));
  CHECK(b.exceptions_add() == std::vector<Int>{2});

  auto c = to_residue_set(family(FamilyKind::MinusBeta, 1));
  CHECK(c.modulus() == 5);
  CHECK(c.allowed() == std::vector<Int>{0, 2, 3, 4});
  CHECK(c.exceptions_add() == std::vector<Int>{1});
}

TEST_CASE("complement exactness and residue-set fidelity") {
  const Int gmax = 3000;
  for (FamilyKind k : kKinds) {
    for (Int p = 1; p <= 40; ++p) {
      auto f = family(k, p);
      auto mem = members(f, gmax);
      auto comp = enumerate_composites(f.composites(), 1, gmax);
      std::vector<Int> both;
      std::merge(mem.begin(), mem.end(), comp.begin(), comp.end(), std::back_inserter(both));
      REQUIRE(both == range(1, gmax));
      auto rs = to_residue_set(f);
      std::set<Int> in(mem.begin(), mem.end());
      for (Int g = 1; g <= gmax; ++g) CHECK(rs.contains(g) == (in.count(g) == 1));
    }
  }
}

TEST_CASE("composite side divides by the modulus") {
  for (FamilyKind k : kKinds)
    for (Int p = 1; p <= 20; ++p) {
      auto f = family(k, p);
      for (Int g : enumerate_composites(f.composites(), 1, 2000)) {
        Int v = value(f.target(), g);
        CHECK(v % f.modulus == 0);
        CHECK(v / f.modulus > 1);
      }
    }
}

TEST_CASE("chi forms reproduce members plus the spurious range") {
  const Int gmax = 800;
  for (FamilyKind k : kKinds) {
    for (Int p = 1; p <= 25; ++p) {
      auto f = family(k, p);
      std::set<Int> positive, spurious;
      for (Int free = 0; free <= gmax / f.modulus + 2; ++free)
        for (Int chi = 1; chi <= f.chi_max; ++chi) {
          Int g = affine_form(f, free, chi);
          if (g <= 0)
            spurious.insert(g);
          else if (g <= gmax)
            positive.insert(g);
        }
      if (f.missing) positive.insert(*f.missing);
      auto mem = members(f, gmax);
      CHECK(std::vector<Int>(positive.begin(), positive.end()) == mem);
      CHECK(std::vector<Int>(spurious.begin(), spurious.end()) == range(f.spurious.lo, f.spurious.hi));
    }
  }
}

TEST_CASE("missing pseudoprime is needed exactly when the modulus is prime") {
  for (Int a = 1; a <= 60; ++a) {
    auto f = family(FamilyKind::Plus1Alpha, a);
    CHECK(testsupport::mod(a, f.modulus) == f.composite_residue);
    auto rs = to_residue_set(f);
    CHECK(rs.contains(a));
    // without the exception gamma = a would be dropped
    CHECK_FALSE(rs.residue_allowed(testsupport::mod(a, f.modulus)));
    auto fb = family(FamilyKind::MinusBeta, a);
    CHECK(to_residue_set(fb).contains(a));
  }
}

TEST_CASE("gamma symmetry examples") {
  CHECK(check_gamma_symmetry(1, 1, 1) == std::pair{true, true});
  CHECK(check_gamma_symmetry(2, 3, 5) == std::pair{true, true});
  CHECK(check_gamma_symmetry(1, 0, 1) == std::pair{true, true});
  CHECK_THROWS_AS(check_gamma_symmetry(1, 1, 0), DomainError);
  CHECK_THROWS_AS(check_gamma_symmetry(1, 1, 7), DomainError);
  CHECK_THROWS_AS(check_beta_symmetry(1, 1, 5), DomainError);
}

TEST_CASE("gamma symmetry grid") {
  for (Int a = 1; a <= 20; ++a)
    for (Int b = 1; b <= 20; ++b) {
      for (Int chi = 1; chi <= 6 * a; ++chi) CHECK(check_gamma_symmetry(a, b, chi) == std::pair{true, true});
      for (Int chi = 1; chi <= 6 * b - 2; ++chi) CHECK(check_beta_symmetry(a, b, chi));
    }
}

TEST_CASE("affine forms by hand") {
  CHECK(gt_alpha(1, 0, 6) == 0);
  CHECK(gt_alpha(1, 1, 1) == 12);
  CHECK(gt_beta(0, 1, 1) == 0);
  CHECK(gt_alpha_1(1, 1, 1) == 7);
  CHECK(gt_alpha_2(1, 0, 4) == 0);
}
