#include "primestep/recursion.hpp"

#include <algorithm>
#include <numeric>

#include "primestep/diophantine.hpp"

namespace primestep {

const std::vector<Int>& StepState::primes(ResidueClass c) const {
  if (c == ResidueClass::OMinus) return primes_minus;
  if (c == ResidueClass::OPlus) return primes_plus;
  throw DomainError("StepState: only O- and O+ carry primes");
}

const std::vector<Piece>& StepState::pieces(ResidueClass c) const {
  if (c == ResidueClass::OMinus) return pieces_minus;
  if (c == ResidueClass::OPlus) return pieces_plus;
  throw DomainError("StepState: only O- and O+ carry pieces");
}

Int StepState::bound(ResidueClass c) const {
  if (c == ResidueClass::OMinus) return bounds.r_minus;
  if (c == ResidueClass::OPlus) return bounds.r_plus;
  throw DomainError("StepState: only O- and O+ have bounds");
}

namespace {

void append_range(std::vector<PseudoprimeFamily>& out, FamilyKind kind, Int upto) {
  for (Int a = 1; a <= upto; ++a) out.push_back(family(kind, a));
}

void append_list(std::vector<PseudoprimeFamily>& out, FamilyKind kind, const std::vector<Int>& params) {
  for (Int a : params) out.push_back(family(kind, a));
}

Piece make_piece(std::uint32_t step, Interval range, const std::vector<PseudoprimeFamily>& families,
                 Int merge_cap) {
  return Piece{step, range, families.size(),
               std::make_shared<const ResidueSystem>(build_constraint(families, merge_cap))};
}

}  // namespace

std::vector<PseudoprimeFamily> select_families(const StepState& state, ResidueClass target,
                                               FamilySelection selection) {
  std::vector<PseudoprimeFamily> out;
  if (target == ResidueClass::OMinus) {
    if (selection == FamilySelection::PrimeOnly) {
      append_list(out, FamilyKind::MinusAlpha, state.primes_plus);
      append_list(out, FamilyKind::MinusBeta, state.primes_minus);
    } else {
      append_range(out, FamilyKind::MinusAlpha, state.bounds.r_plus);
    }
  } else if (target == ResidueClass::OPlus) {
    if (selection == FamilySelection::PrimeOnly) {
      append_list(out, FamilyKind::Plus1Alpha, state.primes_plus);
      append_list(out, FamilyKind::Plus2Alpha, state.primes_minus);
    } else {
      append_range(out, FamilyKind::Plus1Alpha, state.bounds.r_plus);
      append_range(out, FamilyKind::Plus2Alpha, state.bounds.r_minus);
    }
  } else {
    throw DomainError("select_families: target must be O- or O+");
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const PseudoprimeFamily& a, const PseudoprimeFamily& b) { return a.modulus < b.modulus; });
  return out;
}

ResidueSystem build_constraint(const std::vector<PseudoprimeFamily>& families, Int merge_cap) {
  std::vector<ResidueSet> sets;
  sets.reserve(families.size());
  for (const auto& f : families) sets.push_back(to_residue_set(f));
  std::stable_sort(sets.begin(), sets.end(),
                   [](const ResidueSet& a, const ResidueSet& b) { return a.modulus() < b.modulus(); });
  if (sets.size() < 2) return ResidueSystem(std::move(sets));

  std::vector<ResidueSet> factors;
  ResidueSet head = sets.front();
  std::size_t next = 1;
  for (; next < sets.size(); ++next) {
    Int m = head.modulus(), n = sets[next].modulus();
    if (m / std::gcd(m, n) > merge_cap / n) break;
    head = merge(head, sets[next]);
  }
  factors.push_back(std::move(head));
  for (; next < sets.size(); ++next) factors.push_back(std::move(sets[next]));
  return ResidueSystem(std::move(factors));
}

StepState initial_state(const DriverOptions& options) {
  StepState s;
  s.step = 0;
  s.bounds = seed_bounds<Int>();
  std::vector<PseudoprimeFamily> minus{family(FamilyKind::MinusAlpha, 1)};
  std::vector<PseudoprimeFamily> plus{family(FamilyKind::Plus2Alpha, 1), family(FamilyKind::Plus1Alpha, 1)};
  s.pieces_minus.push_back(make_piece(0, {1, s.bounds.r_minus}, minus, options.merge_cap));
  s.pieces_plus.push_back(make_piece(0, {1, s.bounds.r_plus}, plus, options.merge_cap));
  s.primes_minus = s.pieces_minus.front().constraint->accepted(1, s.bounds.r_minus);
  s.primes_plus = s.pieces_plus.front().constraint->accepted(1, s.bounds.r_plus);
  return s;
}

StepState advance(const StepState& state, const DriverOptions& options) {
  const std::uint32_t step = state.step + 1;
  try {
    StepState next;
    next.step = step;
    next.bounds = next_bounds(state.bounds);
    next.pieces_minus = state.pieces_minus;
    next.pieces_plus = state.pieces_plus;
    next.primes_minus = state.primes_minus;
    next.primes_plus = state.primes_plus;

    for (ResidueClass c : {ResidueClass::OMinus, ResidueClass::OPlus}) {
      Interval range{state.bound(c) + 1, next.bound(c)};
      auto families = select_families(state, c, options.selection);
      Piece piece = make_piece(step, range, families, options.merge_cap);
      auto fresh = piece.constraint->accepted(range.lo, range.hi);
      auto& primes = c == ResidueClass::OMinus ? next.primes_minus : next.primes_plus;
      auto& pieces = c == ResidueClass::OMinus ? next.pieces_minus : next.pieces_plus;
      primes.insert(primes.end(), fresh.begin(), fresh.end());
      pieces.push_back(std::move(piece));
    }
    return next;
  } catch (const StepOverflow&) {
    throw;
  } catch (const ArithmeticError& e) {
    throw StepOverflow(step, e.what());
  }
}

std::optional<std::string> check_invariants(const StepState& state) {
  if (state.bounds.step != state.step) return "bounds step does not match state step";
  for (ResidueClass c : {ResidueClass::OMinus, ResidueClass::OPlus}) {
    const std::string name(to_string(c));
    const auto& pieces = state.pieces(c);
    const auto& primes = state.primes(c);
    const Int bound = state.bound(c);
    if (pieces.size() != state.step + 1) return name + ": expected one piece per step";
    Int expect_lo = 1;
    for (std::size_t k = 0; k < pieces.size(); ++k) {
      if (pieces[k].step != k) return name + ": piece " + std::to_string(k) + " has the wrong step";
      if (pieces[k].range.lo != expect_lo || pieces[k].range.hi < pieces[k].range.lo)
        return name + ": piece " + std::to_string(k) + " does not continue the tiling";
      expect_lo = pieces[k].range.hi + 1;
    }
    if (expect_lo != bound + 1) return name + ": pieces do not end at the bound";
    if (!std::is_sorted(primes.begin(), primes.end()) ||
        std::adjacent_find(primes.begin(), primes.end()) != primes.end())
      return name + ": primes not strictly increasing";
    auto it = primes.begin();
    for (const auto& piece : pieces) {
      // Large pieces are checked on an evenly spaced subset that keeps both ends.
      const Int work = piece.range.size() * static_cast<Int>(std::max<std::size_t>(1, piece.constraint->factors().size()));
      const Int stride = std::max<Int>(1, work / kPointwiseBudget);
      for (Int g = piece.range.lo; g <= piece.range.hi; ++g) {
        bool listed = it != primes.end() && *it == g;
        if (listed) ++it;
        if (stride > 1 && (g - piece.range.lo) % stride != 0 && g != piece.range.hi) continue;
        if (listed != piece.constraint->contains(g))
          return name + ": gamma " + std::to_string(g) + (listed ? " listed but rejected" : " accepted but not listed") +
                 " by piece " + std::to_string(piece.step);
      }
    }
    if (it != primes.end()) return name + ": primes beyond the bound";
  }
  return std::nullopt;
}

RunResult run(std::uint32_t s_max, const DriverOptions& options, bool validate) {
  RunResult result;
  try {
    result.states.push_back(initial_state(options));
    for (std::uint32_t s = 1; s <= s_max; ++s) result.states.push_back(advance(result.states.back(), options));
  } catch (const StepOverflow& e) {
    result.failure = StepFailure{e.step(), e.what(), true};
    return result;
  } catch (const ArithmeticError& e) {
    result.failure = StepFailure{static_cast<std::uint32_t>(result.states.size()), e.what(), true};
    return result;
  }
  if (validate) {
    for (const auto& st : result.states) {
      if (auto err = check_invariants(st)) {
        result.failure = StepFailure{st.step, *err, false};
        break;
      }
    }
  }
  return result;
}

}  // namespace primestep
