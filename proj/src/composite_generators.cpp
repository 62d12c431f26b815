#include "primestep/composite_generators.hpp"

#include <string>

namespace primestep {

std::string_view to_string(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::Minus1: return "minus1";
    case GeneratorKind::Minus2: return "minus2";
    case GeneratorKind::Plus1: return "plus1";
    case GeneratorKind::Plus2: return "plus2";
  }
  return "?";
}

ResidueClass target_class(GeneratorKind k) {
  return (k == GeneratorKind::Minus1 || k == GeneratorKind::Minus2) ? ResidueClass::OMinus
                                                                    : ResidueClass::OPlus;
}

Int generator_form(GeneratorKind k, Int alpha, Int beta) {
  Int ab6 = checked_mul(checked_mul(6, alpha), beta);
  switch (k) {
    case GeneratorKind::Minus1: return checked_add(checked_sub(ab6, alpha), beta);
    case GeneratorKind::Minus2: return checked_sub(checked_add(ab6, alpha), beta);
    case GeneratorKind::Plus1: return checked_add(checked_add(ab6, alpha), beta);
    case GeneratorKind::Plus2: return checked_sub(checked_sub(ab6, alpha), beta);
  }
  throw DomainError("generator_form: bad kind");
}

Int gamma_composite(GeneratorKind k, Int alpha, Int beta) {
  if (alpha < 1 || beta < 1)
    throw DomainError("gamma_composite: alpha and beta must be >= 1, got (" + std::to_string(alpha) +
                      ", " + std::to_string(beta) + ")");
  return generator_form(k, alpha, beta);
}

CompositeFamily composite_family(GeneratorKind k, Int alpha) {
  if (alpha < 1) throw DomainError("composite_family: alpha must be >= 1");
  Int six_a = checked_mul(6, alpha);
  switch (k) {
    case GeneratorKind::Minus1: return {k, alpha, six_a + 1, -alpha};
    case GeneratorKind::Minus2: return {k, alpha, six_a - 1, alpha};
    case GeneratorKind::Plus1: return {k, alpha, six_a + 1, alpha};
    case GeneratorKind::Plus2: return {k, alpha, six_a - 1, -alpha};
  }
  throw DomainError("composite_family: bad kind");
}

std::vector<Int> enumerate_composites(const CompositeFamily& f, Int lo, Int hi) {
  std::vector<Int> out;
  lo = std::max(lo, f.first());
  if (hi < lo) return out;
  // smallest member >= lo
  Int beta = floor_div(lo - f.offset + f.modulus - 1, f.modulus);
  Int g = checked_add(checked_mul(beta, f.modulus), f.offset);
  out.reserve(static_cast<std::size_t>((hi - g) / f.modulus + 1));
  for (; g <= hi; g += f.modulus) {
    out.push_back(g);
    if (g > hi - f.modulus) break;
  }
  return out;
}

std::vector<Int> enumerate_composites(GeneratorKind k, Int alpha, Int gamma_max) {
  if (gamma_max < 1) throw DomainError("enumerate_composites: gamma_max must be >= 1");
  return enumerate_composites(composite_family(k, alpha), 1, gamma_max);
}

std::pair<bool, bool> check_sign_symmetry(Int alpha, Int beta) {
  bool first = generator_form(GeneratorKind::Minus1, alpha, -beta) ==
               -generator_form(GeneratorKind::Plus1, alpha, beta);
  bool second = generator_form(GeneratorKind::Minus2, alpha, -beta) ==
                -generator_form(GeneratorKind::Plus2, alpha, beta);
  return {first, second};
}

}  // namespace primestep
