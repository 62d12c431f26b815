#include "primestep/residue_set.hpp"

#include <algorithm>
#include <string>

namespace primestep {

namespace {

void sort_unique(std::vector<Int>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

void check_modulus(Int modulus) {
  if (modulus < 2) throw DomainError("ResidueSet: modulus must be >= 2, got " + std::to_string(modulus));
}

bool has(const std::vector<Int>& sorted, Int x) { return std::binary_search(sorted.begin(), sorted.end(), x); }

}  // namespace

ResidueSet::ResidueSet(Int modulus, std::vector<Int> excluded, std::vector<Int> add, std::vector<Int> remove, int)
    : modulus_(modulus), excluded_(std::move(excluded)) {
  check_modulus(modulus);
  sort_unique(add);
  sort_unique(remove);
  std::vector<Int> both;
  std::set_intersection(add.begin(), add.end(), remove.begin(), remove.end(), std::back_inserter(both));
  if (!both.empty())
    throw DomainError("ResidueSet: gamma " + std::to_string(both.front()) + " both added and removed");
  for (const auto* list : {&add, &remove})
    for (Int g : *list)
      if (g < 1) throw DomainError("ResidueSet: exception gamma must be >= 1, got " + std::to_string(g));
  for (Int g : add)
    if (!residue_allowed(floor_mod(g, modulus_))) add_.push_back(g);
  for (Int g : remove)
    if (residue_allowed(floor_mod(g, modulus_))) remove_.push_back(g);
}

ResidueSet::ResidueSet(Int modulus, const std::vector<Int>& allowed, std::vector<Int> exceptions_add,
                       std::vector<Int> exceptions_remove)
    : ResidueSet(from_bits(modulus,
                           [&] {
                             check_modulus(modulus);
                             std::vector<bool> bits(static_cast<std::size_t>(modulus), false);
                             for (Int r : allowed) {
                               if (r < 0 || r >= modulus)
                                 throw DomainError("ResidueSet: residue " + std::to_string(r) + " outside [0, " +
                                                   std::to_string(modulus) + ")");
                               bits[static_cast<std::size_t>(r)] = true;
                             }
                             return bits;
                           }(),
                           std::move(exceptions_add), std::move(exceptions_remove))) {}

ResidueSet ResidueSet::from_bits(Int modulus, const std::vector<bool>& bits, std::vector<Int> exceptions_add,
                                 std::vector<Int> exceptions_remove) {
  check_modulus(modulus);
  if (bits.size() != static_cast<std::size_t>(modulus))
    throw DomainError("ResidueSet: bitmap size does not match modulus");
  std::vector<Int> excluded;
  for (Int r = 0; r < modulus; ++r)
    if (!bits[static_cast<std::size_t>(r)]) excluded.push_back(r);
  return ResidueSet(modulus, std::move(excluded), std::move(exceptions_add), std::move(exceptions_remove), 0);
}

ResidueSet ResidueSet::full(Int modulus) { return ResidueSet(modulus, {}, {}, {}, 0); }

ResidueSet ResidueSet::all_but(Int modulus, Int excluded, std::vector<Int> exceptions_add) {
  check_modulus(modulus);
  if (excluded < 0 || excluded >= modulus) throw DomainError("ResidueSet::all_but: residue out of range");
  return ResidueSet(modulus, {excluded}, std::move(exceptions_add), {}, 0);
}

bool ResidueSet::residue_allowed(Int r) const { return !has(excluded_, r); }

std::vector<Int> ResidueSet::allowed() const {
  std::vector<Int> out;
  out.reserve(allowed_count());
  auto it = excluded_.begin();
  for (Int r = 0; r < modulus_; ++r) {
    if (it != excluded_.end() && *it == r) {
      ++it;
      continue;
    }
    out.push_back(r);
  }
  return out;
}

bool ResidueSet::contains(Int gamma) const {
  if (has(add_, gamma)) return true;
  if (has(remove_, gamma)) return false;
  return residue_allowed(floor_mod(gamma, modulus_));
}

void ResidueSet::reject_in(Int lo, Int hi, std::vector<char>& keep) const {
  if (hi < lo) return;
  for (Int r : excluded_) {
    for (Int g = lo + floor_mod(r - lo, modulus_); g <= hi; g += modulus_) {
      if (!has(add_, g)) keep[static_cast<std::size_t>(g - lo)] = 0;
      if (g > hi - modulus_) break;
    }
  }
  for (Int g : remove_)
    if (g >= lo && g <= hi) keep[static_cast<std::size_t>(g - lo)] = 0;
}

bool ResidueSystem::contains(Int gamma) const {
  return std::all_of(factors_.begin(), factors_.end(), [gamma](const ResidueSet& f) { return f.contains(gamma); });
}

std::vector<Int> ResidueSystem::accepted(Int lo, Int hi) const {
  std::vector<Int> out;
  if (hi < lo) return out;
  std::vector<char> keep(static_cast<std::size_t>(hi - lo + 1), 1);
  for (const auto& f : factors_) f.reject_in(lo, hi, keep);
  for (Int g = lo; g <= hi; ++g)
    if (keep[static_cast<std::size_t>(g - lo)]) out.push_back(g);
  return out;
}

}  // namespace primestep
