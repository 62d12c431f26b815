#include "primestep/diophantine.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

namespace primestep {

namespace {

using Wide = __int128;

Int narrow(Wide v) {
  if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min())
    throw ArithmeticError("diophantine: solution does not fit in 64 bits");
  return static_cast<Int>(v);
}

Wide wide_mod(Wide a, Wide m) {
  Wide r = a % m;
  return r < 0 ? r + m : r;
}

void check_sign(int sign) {
  if (sign != 1 && sign != -1) throw DomainError("sign must be +1 or -1");
}

BigInt factorial(Int n) {
  BigInt f = 1;
  for (Int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

std::string_view to_string(Subcase s) {
  switch (s) {
    case Subcase::Divisible: return "divisible";
    case Subcase::CommonFactor: return "common-factor";
    case Subcase::Coprime: return "coprime";
  }
  return "?";
}

Int DiophantineProblem::p_i() const { return checked_add(checked_mul(6, alpha_i), sign_i); }
Int DiophantineProblem::p_j() const { return checked_add(checked_mul(6, alpha_j), sign_j); }

void DiophantineProblem::validate() const {
  if (alpha_i < 1 || alpha_j < 1) throw DomainError("DiophantineProblem: alpha must be >= 1");
  check_sign(sign_i);
  check_sign(sign_j);
}

ExtendedGcd extended_gcd(Int a, Int b) {
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
    old_t = std::exchange(t, old_t - q * t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

std::optional<SolutionFamily> solve_linear(Int a, Int b, Int c) {
  if (a <= 0 || b <= 0) throw DomainError("solve_linear: coefficients must be positive");
  auto [g, s, t] = extended_gcd(a, b);
  if (c % g != 0) return std::nullopt;
  // a*s + b*t = g, so x = s*k, y = -t*k with k = -c/g gives a*x - b*y = -c.
  Wide k = -static_cast<Wide>(c) / g;
  Wide x = static_cast<Wide>(s) * k;
  Wide y = -static_cast<Wide>(t) * k;
  Wide step_x = b / g;
  Wide step_y = a / g;
  Wide r = wide_mod(y, step_y);
  Wide y0 = r == 0 ? 0 : r - step_y;
  Wide shift = (y0 - y) / step_y;
  Wide x0 = x + shift * step_x;
  if (static_cast<Wide>(a) * x0 - static_cast<Wide>(b) * y0 + c != 0)
    throw ArithmeticError("solve_linear: internal substitution check failed");
  return SolutionFamily{narrow(x0), narrow(y0), narrow(step_x), narrow(step_y)};
}

Subcase classify_pair(const DiophantineProblem& p) {
  p.validate();
  Int pi = p.p_i(), pj = p.p_j();
  Int g = std::gcd(pi, pj);
  if (g == 1) return Subcase::Coprime;
  if (g == pi) return Subcase::Divisible;
  return Subcase::CommonFactor;
}

bool solvable(const DiophantineProblem& p) {
  p.validate();
  return p.kappa_diff() % std::gcd(p.p_i(), p.p_j()) == 0;
}

SolutionFamily solve(const DiophantineProblem& p) {
  p.validate();
  auto sol = solve_linear(p.p_i(), p.p_j(), p.kappa_diff());
  if (!sol)
    throw NoSolution("no solution: gcd(" + std::to_string(p.p_i()) + ", " + std::to_string(p.p_j()) +
                     ") does not divide " + std::to_string(p.kappa_diff()));
  return *sol;
}

SolutionFamily solve_opposite_sign(const DiophantineProblem& p) {
  p.validate();
  if (p.sign_i != -p.sign_j) throw DomainError("solve_opposite_sign: signs must differ");
  return solve(p);
}

Rational iterated_product(Int alpha, Int delta_alpha, int sign) {
  check_sign(sign);
  Rational prod = 1;
  for (Int k = 2; k <= delta_alpha; ++k) prod *= Rational(1) + Rational(BigInt(sign) * 6 * alpha, BigInt(k));
  return prod;
}

Rational product_closed_form(Int alpha, Int delta_alpha, int sign) {
  check_sign(sign);
  if (alpha < 1 || delta_alpha < 2 || delta_alpha >= 6 * alpha + sign)
    throw DomainError("product_closed_form: need 2 <= delta_alpha < 6alpha" + std::string(sign > 0 ? "+1" : "-1"));
  Int m = 6 * alpha;
  if (sign > 0) {
    // Gamma(m + d + 1) / (Gamma(d + 1) Gamma(m + 2))
    return Rational(factorial(m + delta_alpha), factorial(delta_alpha) * factorial(m + 1));
  }
  // (-1)^(d+1) Gamma(m - 1) / (Gamma(d + 1) Gamma(m - d))
  Rational r(factorial(m - 2), factorial(delta_alpha) * factorial(m - delta_alpha - 1));
  return (delta_alpha + 1) % 2 == 0 ? r : Rational(-r);
}

namespace {

Rational product_solution(Int alpha, int sign, Int delta_alpha, Int c, const char* who) {
  check_sign(sign);
  if (alpha < 1 || delta_alpha < 1 || delta_alpha >= 6 * alpha + sign)
    throw DomainError(std::string(who) + ": need 1 <= delta_alpha < 6alpha+-1");
  Rational prod = delta_alpha == 1 ? Rational(1) : product_closed_form(alpha, delta_alpha, sign);
  return Rational(BigInt(-sign) * c * alpha) * prod;
}

}  // namespace

Rational product_beta_j(Int alpha_i, int sign, Int delta_alpha, Int c) {
  return product_solution(alpha_i, sign, delta_alpha, c, "product_beta_j");
}

Rational product_beta_i(Int alpha_j, int sign, Int delta_alpha, Int c) {
  return product_solution(alpha_j, sign, delta_alpha, c, "product_beta_i");
}

Int opposite_displacement(Int delta_alpha, int sign_i) {
  check_sign(sign_i);
  return checked_sub(checked_mul(6, delta_alpha), 2 * sign_i);
}

Int exact_step_index(Int alpha_i, int sign_i, Int delta_alpha) {
  Int p = 6 * alpha_i + sign_i;
  Int da = opposite_displacement(delta_alpha, sign_i);
  if (da < 1) throw DomainError("exact_step_index: displacement must be >= 1");
  return (da - 1) / p;
}

Int approximate_step_index(Int alpha_i, int sign_i, Int delta_alpha) {
  check_sign(sign_i);
  if (alpha_i < 1) throw DomainError("approximate_step_index: alpha_i must be >= 1");
  return floor_div(sign_i > 0 ? delta_alpha - 1 : delta_alpha, alpha_i);
}

Rational product_beta_j_opposite(Int alpha_i, int sign_i, Int delta_alpha, Int c) {
  Int p = 6 * alpha_i + sign_i;
  Int da = opposite_displacement(delta_alpha, sign_i);
  Int reduced = da - exact_step_index(alpha_i, sign_i, delta_alpha) * p;
  if (reduced == p) throw DomainError("product_beta_j_opposite: p_i divides the displacement");
  return Rational(6) * product_beta_j(alpha_i, sign_i, reduced, c);
}

Rational product_beta_i_opposite(const DiophantineProblem& p) {
  p.validate();
  if (p.sign_i != -p.sign_j) throw DomainError("product_beta_i_opposite: signs must differ");
  Int da = p.p_j() - p.p_i();
  if (da < 1) throw DomainError("product_beta_i_opposite: requires p_j > p_i");
  return Rational(6) * product_beta_i(p.alpha_j, p.sign_j, da, p.kappa_diff());
}

std::optional<Int> reduce_mod(const Rational& q, Int m) {
  if (m < 1) throw DomainError("reduce_mod: modulus must be >= 1");
  BigInt num = boost::multiprecision::numerator(q);
  BigInt den = boost::multiprecision::denominator(q);
  BigInt bm = m;
  Int d = static_cast<Int>(((den % bm) + bm) % bm);
  auto [g, inv, unused] = extended_gcd(d, m);
  (void)unused;
  if (g != 1) return std::nullopt;
  Int n = static_cast<Int>(((num % bm) + bm) % bm);
  Wide r = wide_mod(static_cast<Wide>(n) * wide_mod(inv, m), m);
  return static_cast<Int>(r);
}

bool congruent(Int x, const Rational& q, Int m) {
  auto r = reduce_mod(q, m);
  return r && *r == floor_mod(x, m);
}

ResidueSet merge(const ResidueSet& a, const ResidueSet& b) {
  Int ma = a.modulus(), mb = b.modulus();
  Int g = std::gcd(ma, mb);
  Int l = checked_mul(ma / g, mb);
  if (l > kMaxMergedModulus)
    throw DomainError("merge: modulus " + std::to_string(l) + " exceeds the materialization limit");
  std::vector<bool> bits(static_cast<std::size_t>(l), false);
  const std::vector<Int> ra = a.allowed();
  const std::vector<Int> rb = b.allowed();
  for (Int x : ra) {
    for (Int y : rb) {
      // gamma = ma * s + x = mb * t + y  <=>  ma*s - mb*t + (x - y) = 0
      auto sol = solve_linear(ma, mb, x - y);
      if (!sol) continue;
      Wide gamma = static_cast<Wide>(ma) * sol->beta_i_base + x;
      bits[static_cast<std::size_t>(wide_mod(gamma, l))] = true;
    }
  }
  std::vector<Int> candidates;
  for (const auto* s : {&a, &b}) {
    candidates.insert(candidates.end(), s->exceptions_add().begin(), s->exceptions_add().end());
    candidates.insert(candidates.end(), s->exceptions_remove().begin(), s->exceptions_remove().end());
  }
  std::vector<Int> add, remove;
  for (Int gamma : candidates) {
    bool want = a.contains(gamma) && b.contains(gamma);
    bool have = bits[static_cast<std::size_t>(floor_mod(gamma, l))];
    if (want && !have) add.push_back(gamma);
    if (!want && have) remove.push_back(gamma);
  }
  return ResidueSet::from_bits(l, bits, std::move(add), std::move(remove));
}

}  // namespace primestep
