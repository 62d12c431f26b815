#pragma once

#include <optional>
#include <stdexcept>
#include <string_view>
#include <utility>

#include "primestep/bigint.hpp"
#include "primestep/checked.hpp"
#include "primestep/residue_set.hpp"

namespace primestep {

/// 0 = p_i * beta_i - p_j * beta_j + kappa_i - kappa_j  with  p = 6 alpha + sign.
struct DiophantineProblem {
  Int alpha_i;
  Int alpha_j;
  int sign_i;
  int sign_j;
  Int kappa_i = 0;
  Int kappa_j = 0;

  Int p_i() const;
  Int p_j() const;
  Int kappa_diff() const { return checked_sub(kappa_i, kappa_j); }
  bool same_sign() const { return sign_i == sign_j; }
  /// Throws DomainError unless alpha >= 1 and sign is +-1 on both sides.
  void validate() const;
};

enum class Subcase { Divisible, CommonFactor, Coprime };

std::string_view to_string(Subcase s);

/// beta_i = beta_i_base + step_i * Y, beta_j = beta_j_base + step_j * Y for every integer Y.
struct SolutionFamily {
  Int beta_i_base;
  Int beta_j_base;
  Int step_i;
  Int step_j;

  std::pair<Int, Int> at(Int y) const {
    return {checked_add(beta_i_base, checked_mul(step_i, y)), checked_add(beta_j_base, checked_mul(step_j, y))};
  }
  bool operator==(const SolutionFamily&) const = default;
};

/// An empty intersection branch. Callers merging residue sets treat it as "no residue".
class NoSolution : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExtendedGcd {
  Int gcd;
  Int x;
  Int y;
};

/// a*x + b*y = gcd(a, b) >= 0.
ExtendedGcd extended_gcd(Int a, Int b);

/// Solves a*x - b*y + c = 0 for a, b > 0. The particular solution has
/// y in (-a/g, 0]; x follows. Returns nullopt when gcd(a, b) does not divide c.
std::optional<SolutionFamily> solve_linear(Int a, Int b, Int c);

Subcase classify_pair(const DiophantineProblem& p);

/// gcd(p_i, p_j) | (kappa_i - kappa_j).
bool solvable(const DiophantineProblem& p);

/// Full solution set via the extended Euclidean algorithm. Throws NoSolution.
SolutionFamily solve(const DiophantineProblem& p);

/// Same engine; additionally requires sign_i == -sign_j.
SolutionFamily solve_opposite_sign(const DiophantineProblem& p);

// --- Product-form route ------------------------------------------------------
//
// For same-sign coprime moduli with alpha_j = alpha_i + d, 1 <= d < p_i:
//   beta_j = p_i Y -+ c alpha_i prod_{k=2}^{d} (1 +- 6 alpha_i / k)
// and symmetrically for beta_i with alpha_j. These functions evaluate the
// right-hand sides exactly; the engine above is checked against them by
// congruence.

/// Literal prod_{k=2}^{d} (1 + sign * 6 alpha / k); empty product for d < 2.
Rational iterated_product(Int alpha, Int delta_alpha, int sign);

/// The same product via factorial ratios:
///   +: (6a+d)! / (d! (6a+1)!)
///   -: (-1)^(d+1) (6a-2)! / (d! (6a-d-1)!)
/// Requires 2 <= d < 6a + sign.
Rational product_closed_form(Int alpha, Int delta_alpha, int sign);

/// -sign * c * alpha_i * prod(alpha_i, d). Requires 1 <= d < 6 alpha_i + sign.
Rational product_beta_j(Int alpha_i, int sign, Int delta_alpha, Int c);

/// -sign * c * alpha_j * prod(alpha_j, d). Requires 1 <= d < 6 alpha_j + sign.
Rational product_beta_i(Int alpha_j, int sign, Int delta_alpha, Int c);

/// Opposite signs: p_j - p_i = 6 d - 2 sign_i. This is the displacement dA.
Int opposite_displacement(Int delta_alpha, int sign_i);

/// Exact f with dA - f * p_i in [1, p_i]; dA itself must be >= 1.
Int exact_step_index(Int alpha_i, int sign_i, Int delta_alpha);

/// The width-alpha_i staircase that approximates f, equal to 1 first at
/// d = alpha_i + 1 (sign +) resp. d = alpha_i (sign -).
Int approximate_step_index(Int alpha_i, int sign_i, Int delta_alpha);

/// beta_j = 6 B_j with B_j the same-sign product solution at dA reduced into
/// [1, p_i - 1]. Throws DomainError if p_i | dA.
Rational product_beta_j_opposite(Int alpha_i, int sign_i, Int delta_alpha, Int c);

/// beta_i = 6 B_i with B_i the same-sign beta_i product at displacement
/// dA = p_j - p_i seen from p_j (no reduction needed). Requires p_j > p_i.
Rational product_beta_i_opposite(const DiophantineProblem& p);

/// q mod m when q's denominator is invertible mod m.
std::optional<Int> reduce_mod(const Rational& q, Int m);

/// x == q (mod m), false when q is not m-integral.
bool congruent(Int x, const Rational& q, Int m);

// --- Residue set intersection -------------------------------------------------

/// Largest modulus merge will materialize.
inline constexpr Int kMaxMergedModulus = Int{1} << 22;

/// Intersection modulo lcm(a, b): every allowed residue pair (ra, rb) is
/// combined by solving M_a x + ra = M_b y + rb. Exceptions are resolved by
/// evaluating both operands directly.
ResidueSet merge(const ResidueSet& a, const ResidueSet& b);

}  // namespace primestep
