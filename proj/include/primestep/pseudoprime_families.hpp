#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "primestep/checked.hpp"
#include "primestep/composite_generators.hpp"
#include "primestep/residue_set.hpp"

namespace primestep {

// For a fixed parameter, the gammas NOT produced by one composite generator.
//
//   MinusAlpha(a)  modulus 6a+1, misses  Minus1(a, .)          in O-
//   MinusBeta(b)   modulus 6b-1, misses  Minus1(., b)          in O-  (b fixed)
//   Plus1Alpha(a)  modulus 6a+1, misses  Plus1(a, .)           in O+
//   Plus2Alpha(a)  modulus 6a-1, misses  Plus2(a, .)           in O+
//
// Each family is "every residue but one" modulo its modulus. MinusBeta and
// Plus1Alpha additionally keep the modulus itself (gamma = b resp. a), which
// sits on the composite residue but is not generated.
enum class FamilyKind { MinusAlpha, MinusBeta, Plus1Alpha, Plus2Alpha };

std::string_view to_string(FamilyKind k);

struct Interval {
  Int lo;
  Int hi;

  bool contains(Int x) const { return lo <= x && x <= hi; }
  Int size() const { return hi < lo ? 0 : hi - lo + 1; }
  bool operator==(const Interval&) const = default;
};

struct PseudoprimeFamily {
  FamilyKind kind;
  Int parameter;
  Int modulus;
  Int chi_max;
  Interval spurious;  // non-positive values emitted by the chi form, dropped by the gamma >= 1 cut
  std::optional<Int> missing;
  Int composite_residue;

  ResidueClass target() const;
  /// The generator whose members this family excludes.
  CompositeFamily composites() const;
};

PseudoprimeFamily family(FamilyKind kind, Int parameter);

/// [1, gamma_max] minus the matching composites.
std::vector<Int> members(const PseudoprimeFamily& f, Int gamma_max);

ResidueSet to_residue_set(const PseudoprimeFamily& f);

// Affine chi forms, sign-extended to all integer arguments.
//   gt_alpha   (a, b, chi)  = (6a+1) b + 5a + 1 - chi,  chi <= 6a
//   gt_beta    (at, b, chi) = (6b-1) at + b - chi,      chi <= 6b-2   (alpha = at - 1)
//   gt_alpha_1 (a, bt, chi) = (6a+1) bt + a - chi,      chi <= 6a     (beta = bt - 1)
//   gt_alpha_2 (a, b, chi)  = (6a-1) b + 5a - 1 - chi,  chi <= 6a-2
Int gt_alpha(Int alpha, Int beta, Int chi);
Int gt_beta(Int alpha_t, Int beta, Int chi);
Int gt_alpha_1(Int alpha, Int beta_t, Int chi);
Int gt_alpha_2(Int alpha, Int beta, Int chi);

/// The affine form of `f` evaluated at (parameter, free, chi).
Int affine_form(const PseudoprimeFamily& f, Int free, Int chi);

/// First: gt_alpha(a,-b,chi) = -gt_alpha_1(a,b,6a+1-chi) together with its
/// mirrored form. Second: gt_alpha_2(a,-b,chi) = -gt_beta(b,a,6a-1-chi), plus
/// gt_beta(-a,b,chi) = -gt_alpha_2(b,a,6b-1-chi) when 1 <= chi <= 6b-2.
/// Requires 1 <= chi <= 6a; throws DomainError otherwise.
std::pair<bool, bool> check_gamma_symmetry(Int alpha, Int beta, Int chi);

/// gt_beta(-a,b,chi) = -gt_alpha_2(b,a,6b-1-chi). Requires b >= 1, 1 <= chi <= 6b-2.
bool check_beta_symmetry(Int alpha, Int beta, Int chi);

}  // namespace primestep
