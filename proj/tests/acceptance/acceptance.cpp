// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "primestep/bounds.hpp"
#include "primestep/cli.hpp"
#include "primestep/composite_generators.hpp"
#include "primestep/diophantine.hpp"
#include "primestep/oracle.hpp"
#include "primestep/pseudoprime_families.hpp"
#include "primestep/recursion.hpp"

using namespace primestep;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

Int smallest_factor(Int n) {
  for (Int d = 2; d * d <= n; ++d)
    if (n % d == 0) return d;
  return n;
}

Outcome table1() {
  const std::vector<std::vector<Int>> expected = {{6, 13, 20},  {11, 24, 37}, {16, 35, 54},
                                                  {8, 15, 22},  {15, 28, 41}, {22, 41, 60},
                                                  {4, 9, 14},   {9, 20, 31},  {14, 31, 48}};
  cli::RunConfig config;
  config.format = cli::Format::Json;
  std::ostringstream os;
  cli::cmd_table1(config, os);
  auto cells = nlohmann::json::parse(os.str())["cells"];
  if (cells.size() != expected.size()) return fail("expected 9 cells, got " + std::to_string(cells.size()));
  for (std::size_t i = 0; i < expected.size(); ++i)
    if (cells[i]["values"].get<std::vector<Int>>() != expected[i])
      return fail("cell " + std::to_string(i) + " is " + cells[i]["values"].dump());
  return {true, "9/9 cells"};
}

Outcome step_ranges() {
  auto b1 = next_bounds(seed_bounds<Int>());
  auto b2 = next_bounds(b1);
  if (b1.r_minus != 21 || b1.r_plus != 29) return fail("s=1 bounds differ");
  if (b2.r_minus != 146 || b2.r_plus != 104) return fail("s=2 bounds differ");
  auto b = seed_bounds<Int>();
  for (std::uint32_t s = 1; s <= 15; ++s) {
    b = next_bounds(b);
    if (!(closed_form_bounds<Int>(s) == b)) return fail("closed form differs at s=" + std::to_string(s));
  }
  return {true, "(21,29), (146,104), closed form = recurrence for s<=15"};
}

Outcome oracle_equality() {
  auto r = run(5);
  if (r.failure) return fail("run failed at step " + std::to_string(r.failure->step) + ": " + r.failure->message);
  const auto& last = r.states.back().bounds;
  auto table = oracle::sieve(std::max(6 * last.r_minus - 1, 6 * last.r_plus + 1));
  std::size_t compared = 0;
  for (std::size_t s = 1; s <= 5; ++s) {
    const auto& st = r.states[s];
    for (ResidueClass c : {ResidueClass::OMinus, ResidueClass::OPlus}) {
      if (st.primes(c) != oracle::gamma_primes(table, c, st.bound(c)))
        return fail("step " + std::to_string(s) + " class " + std::string(to_string(c)) + " differs");
      compared += st.primes(c).size();
    }
  }
  return {true, "s=1..5, " + std::to_string(compared) + " gammas compared, top gamma " +
                    std::to_string(std::max(last.r_minus, last.r_plus))};
}

Outcome complement() {
  const Int gmax = 10000;
  std::size_t families = 0;
  for (FamilyKind k : {FamilyKind::MinusAlpha, FamilyKind::MinusBeta, FamilyKind::Plus1Alpha, FamilyKind::Plus2Alpha}) {
    for (Int p = 1; p <= 100; ++p) {
      auto f = family(k, p);
      auto mem = members(f, gmax);
      auto comp = enumerate_composites(f.composites(), 1, gmax);
      std::vector<Int> both;
      std::merge(mem.begin(), mem.end(), comp.begin(), comp.end(), std::back_inserter(both));
      if (static_cast<Int>(both.size()) != gmax) return fail(std::string(to_string(k)) + " " + std::to_string(p) + ": sizes do not add up");
      for (Int g = 1; g <= gmax; ++g)
        if (both[static_cast<std::size_t>(g - 1)] != g)
          return fail(std::string(to_string(k)) + " " + std::to_string(p) + ": gamma " + std::to_string(g));
      ++families;
    }
  }
  return {true, std::to_string(families) + " families partition [1, 10000]"};
}

Outcome diophantine_brute() {
  std::vector<std::pair<Int, int>> ms;
  for (Int a = 1; 6 * a - 1 <= 199; ++a) {
    ms.push_back({a, -1});
    if (6 * a + 1 <= 199) ms.push_back({a, 1});
  }
  std::size_t problems = 0, solved = 0;
  for (auto [ai, si] : ms)
    for (auto [aj, sj] : ms)
      for (Int c = -10; c <= 10; ++c) {
        DiophantineProblem p{ai, aj, si, sj, c, 0};
        Int pi = p.p_i(), pj = p.p_j();
        bool brute = false;
        for (Int bi = -500; bi <= 500 && !brute; ++bi) brute = (pi * bi + c) % pj == 0;
        ++problems;
        if (solvable(p) != brute) return fail("solvable disagrees at p_i=" + std::to_string(pi) + " p_j=" + std::to_string(pj) + " c=" + std::to_string(c));
        if (!brute) continue;
        auto sol = solve(p);
        for (Int y = -3; y <= 3; ++y) {
          auto [bi, bj] = sol.at(y);
          if (pi * bi - pj * bj + c != 0) return fail("substitution fails at p_i=" + std::to_string(pi) + " p_j=" + std::to_string(pj));
        }
        ++solved;
      }
  return {true, std::to_string(problems) + " problems, " + std::to_string(solved) + " solvable, all families checked"};
}

Outcome product_form() {
  if (product_closed_form(1, 3, 1) != 12 || iterated_product(1, 3, 1) != 12) return fail("spot value 12");
  if (product_closed_form(1, 3, -1) != 2 || iterated_product(1, 3, -1) != 2) return fail("spot value 2");
  std::size_t n = 0;
  for (Int a = 1; a <= 30; ++a)
    for (int s : {1, -1})
      for (Int d = 2; d < 6 * a + s; ++d) {
        if (product_closed_form(a, d, s) != iterated_product(a, d, s))
          return fail("alpha=" + std::to_string(a) + " d=" + std::to_string(d));
        ++n;
      }
  return {true, std::to_string(n) + " (alpha, d, sign) triples, spot values 12 and 2"};
}

Outcome symmetry() {
  std::size_t n = 0;
  for (Int a = 1; a <= 20; ++a)
    for (Int b = 1; b <= 20; ++b) {
      if (check_sign_symmetry(a, b) != std::pair{true, true}) return fail("sign relation at " + std::to_string(a) + "," + std::to_string(b));
      for (Int chi = 1; chi <= 6 * a; ++chi, ++n)
        if (check_gamma_symmetry(a, b, chi) != std::pair{true, true})
          return fail("gamma relation at " + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(chi));
      for (Int chi = 1; chi <= 6 * b - 2; ++chi, ++n)
        if (!check_beta_symmetry(a, b, chi)) return fail("beta relation at " + std::to_string(a) + "," + std::to_string(b));
    }
  return {true, "400 sign pairs, " + std::to_string(n) + " chi points"};
}

Outcome progress() {
  auto b = seed_bounds<Int>();
  for (std::uint32_t s = 1; s <= 12; ++s) {
    auto next = next_bounds(b);
    if (!bertrand_check(b, next)) return fail("bertrand_check fails at s=" + std::to_string(s));
    for (ResidueClass c : {ResidueClass::OMinus, ResidueClass::OPlus}) {
      bool found = false;
      for (Int g = (c == ResidueClass::OMinus ? b.r_minus : b.r_plus) + 1;
           g <= (c == ResidueClass::OMinus ? next.r_minus : next.r_plus) && !found; ++g)
        found = oracle::is_prime(value(c, g));
      if (!found) return fail("no new prime at s=" + std::to_string(s) + " in " + std::string(to_string(c)));
    }
    b = next;
  }
  return {true, "s=1..12"};
}

Outcome engine_vs_product() {
  std::size_t checked = 0, skipped = 0, periodic = 0;
  for (Int ai = 1; ai <= 10; ++ai)
    for (int s : {1, -1}) {
      Int pi = 6 * ai + s;
      Int spf = smallest_factor(pi);
      for (Int d = 2; d < pi; ++d)
        for (Int c = -5; c <= 5; ++c) {
          DiophantineProblem p{ai, ai + d, s, s, c, 0};
          if (classify_pair(p) != Subcase::Coprime) continue;
          auto sol = solve(p);
          // k <= d must be invertible mod p_i for the product to be p_i-integral
          if (d >= spf) {
            ++skipped;
          } else {
            if (!congruent(sol.beta_j_base, product_beta_j(ai, s, d, c), pi))
              return fail("alpha_i=" + std::to_string(ai) + " d=" + std::to_string(d) + " c=" + std::to_string(c));
            ++checked;
          }
          for (Int n = 1; n <= 2; ++n) {
            auto shifted = solve(DiophantineProblem{ai, ai + d + n * pi, s, s, c, 0});
            if (shifted.beta_j_base != sol.beta_j_base ||
                shifted.beta_i_base != sol.beta_i_base + 6 * n * sol.beta_j_base)
              return fail("periodicity at alpha_i=" + std::to_string(ai) + " d=" + std::to_string(d));
            ++periodic;
          }
        }
    }
  return {true, std::to_string(checked) + " congruences, " + std::to_string(skipped) +
                    " points not p_i-integral skipped, " + std::to_string(periodic) + " periodicity checks"};
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Table-1 reproduction", 1, table1},
      {2, "step-range reproduction", 1, step_ranges},
      {3, "oracle equality of prime sets", 30, oracle_equality},
      {4, "complement property", 10, complement},
      {5, "Diophantine solver vs brute force", 30, diophantine_brute},
      {6, "product-form identity", 5, product_form},
      {7, "symmetry suites", 5, symmetry},
      {8, "progress guarantee", 5, progress},
      {9, "extended-gcd vs product-form consistency", 30, engine_vs_product},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && secs > c.budget_s) o = fail(o.detail + "; over the " + std::to_string(c.budget_s) + " s budget");
    if (!o.ok) ++failures;
    std::printf("%s criterion %d: %s (%.3f s) %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, secs, o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
