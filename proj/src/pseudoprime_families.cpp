#include "primestep/pseudoprime_families.hpp"

#include <algorithm>
#include <string>

namespace primestep {

std::string_view to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::MinusAlpha: return "minus-alpha";
    case FamilyKind::MinusBeta: return "minus-beta";
    case FamilyKind::Plus1Alpha: return "plus1-alpha";
    case FamilyKind::Plus2Alpha: return "plus2-alpha";
  }
  return "?";
}

ResidueClass PseudoprimeFamily::target() const {
  return (kind == FamilyKind::MinusAlpha || kind == FamilyKind::MinusBeta) ? ResidueClass::OMinus
                                                                           : ResidueClass::OPlus;
}

CompositeFamily PseudoprimeFamily::composites() const {
  switch (kind) {
    case FamilyKind::MinusAlpha: return composite_family(GeneratorKind::Minus1, parameter);
    // Minus1 with beta fixed is Minus2 with its first argument fixed: (6b-1)a + b.
    case FamilyKind::MinusBeta: return composite_family(GeneratorKind::Minus2, parameter);
    case FamilyKind::Plus1Alpha: return composite_family(GeneratorKind::Plus1, parameter);
    case FamilyKind::Plus2Alpha: return composite_family(GeneratorKind::Plus2, parameter);
  }
  throw DomainError("composites: bad kind");
}

Int gt_alpha(Int alpha, Int beta, Int chi) {
  Int p = checked_add(checked_mul(6, alpha), 1);
  return checked_sub(checked_add(checked_add(checked_mul(p, beta), checked_mul(5, alpha)), 1), chi);
}

Int gt_beta(Int alpha_t, Int beta, Int chi) {
  Int p = checked_sub(checked_mul(6, beta), 1);
  return checked_sub(checked_add(checked_mul(p, alpha_t), beta), chi);
}

Int gt_alpha_1(Int alpha, Int beta_t, Int chi) {
  Int p = checked_add(checked_mul(6, alpha), 1);
  return checked_sub(checked_add(checked_mul(p, beta_t), alpha), chi);
}

Int gt_alpha_2(Int alpha, Int beta, Int chi) {
  Int p = checked_sub(checked_mul(6, alpha), 1);
  return checked_sub(checked_sub(checked_add(checked_mul(p, beta), checked_mul(5, alpha)), 1), chi);
}

Int affine_form(const PseudoprimeFamily& f, Int free, Int chi) {
  switch (f.kind) {
    case FamilyKind::MinusAlpha: return gt_alpha(f.parameter, free, chi);
    case FamilyKind::MinusBeta: return gt_beta(free, f.parameter, chi);
    case FamilyKind::Plus1Alpha: return gt_alpha_1(f.parameter, free, chi);
    case FamilyKind::Plus2Alpha: return gt_alpha_2(f.parameter, free, chi);
  }
  throw DomainError("affine_form: bad kind");
}

PseudoprimeFamily family(FamilyKind kind, Int parameter) {
  if (parameter < 1) throw DomainError("family: parameter must be >= 1, got " + std::to_string(parameter));
  PseudoprimeFamily f{kind, parameter, 0, 0, {0, 0}, std::nullopt, 0};
  CompositeFamily c = f.composites();
  f.modulus = c.modulus;
  f.chi_max = c.modulus - 1;
  f.composite_residue = c.residue();
  if (kind == FamilyKind::MinusBeta || kind == FamilyKind::Plus1Alpha) f.missing = parameter;
  // The free parameter starts at 0 in every substituted form; the lowest
  // values come from free = 0 and chi = chi_max.
  f.spurious = {affine_form(f, 0, f.chi_max), 0};
  return f;
}

std::vector<Int> members(const PseudoprimeFamily& f, Int gamma_max) {
  if (gamma_max < 1) throw DomainError("members: gamma_max must be >= 1");
  std::vector<Int> composite = enumerate_composites(f.composites(), 1, gamma_max);
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(gamma_max) - composite.size());
  auto it = composite.begin();
  for (Int g = 1; g <= gamma_max; ++g) {
    if (it != composite.end() && *it == g) {
      ++it;
      continue;
    }
    out.push_back(g);
  }
  return out;
}

ResidueSet to_residue_set(const PseudoprimeFamily& f) {
  std::vector<Int> add;
  if (f.missing) add.push_back(*f.missing);
  return ResidueSet::all_but(f.modulus, f.composite_residue, std::move(add));
}

bool check_beta_symmetry(Int alpha, Int beta, Int chi) {
  if (beta < 1 || chi < 1 || chi > 6 * beta - 2)
    throw DomainError("check_beta_symmetry: need beta >= 1 and 1 <= chi <= 6beta-2");
  return gt_beta(-alpha, beta, chi) == -gt_alpha_2(beta, alpha, 6 * beta - 1 - chi);
}

std::pair<bool, bool> check_gamma_symmetry(Int alpha, Int beta, Int chi) {
  if (alpha < 1 || chi < 1 || chi > checked_mul(6, alpha))
    throw DomainError("check_gamma_symmetry: chi must lie in [1, 6alpha], got chi=" + std::to_string(chi) +
                      " alpha=" + std::to_string(alpha));
  Int mirrored = 6 * alpha + 1 - chi;
  bool first = gt_alpha(alpha, -beta, chi) == -gt_alpha_1(alpha, beta, mirrored) &&
               -gt_alpha(alpha, beta, mirrored) == gt_alpha_1(alpha, -beta, chi);
  bool second = gt_alpha_2(alpha, -beta, chi) == -gt_beta(beta, alpha, 6 * alpha - 1 - chi);
  if (beta >= 1 && chi <= 6 * beta - 2) second = second && check_beta_symmetry(alpha, beta, chi);
  return {first, second};
}

}  // namespace primestep
