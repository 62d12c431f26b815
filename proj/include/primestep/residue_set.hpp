#pragma once

#include <cstddef>
#include <vector>

#include "primestep/checked.hpp"

namespace primestep {

/// Allowed residues modulo `modulus` plus finite gamma-level overrides.
///
/// membership(g) is true when g is in exceptions_add, false when g is in
/// exceptions_remove, and otherwise (g mod modulus) in allowed. The exception
/// lists are kept canonical: an add entry always has a disallowed residue and
/// a remove entry an allowed one, so two sets with the same membership
/// compare equal.
///
/// Stored as the sorted list of excluded residues; the families the driver
/// builds exclude a single residue each.
class ResidueSet {
 public:
  ResidueSet(Int modulus, const std::vector<Int>& allowed, std::vector<Int> exceptions_add = {},
             std::vector<Int> exceptions_remove = {});

  /// Every residue allowed.
  static ResidueSet full(Int modulus);
  /// Every residue except `excluded`.
  static ResidueSet all_but(Int modulus, Int excluded, std::vector<Int> exceptions_add = {});
  /// From a residue bitmap of size `modulus`.
  static ResidueSet from_bits(Int modulus, const std::vector<bool>& bits, std::vector<Int> exceptions_add = {},
                              std::vector<Int> exceptions_remove = {});

  Int modulus() const { return modulus_; }
  std::vector<Int> allowed() const;
  const std::vector<Int>& excluded() const { return excluded_; }
  std::size_t allowed_count() const { return static_cast<std::size_t>(modulus_) - excluded_.size(); }
  bool residue_allowed(Int r) const;
  const std::vector<Int>& exceptions_add() const { return add_; }
  const std::vector<Int>& exceptions_remove() const { return remove_; }

  bool contains(Int gamma) const;

  /// Clears keep[g - lo] for every g in [lo, hi] that is not a member.
  void reject_in(Int lo, Int hi, std::vector<char>& keep) const;

  bool operator==(const ResidueSet& other) const = default;

 private:
  ResidueSet(Int modulus, std::vector<Int> excluded, std::vector<Int> add, std::vector<Int> remove, int);

  Int modulus_;
  std::vector<Int> excluded_;
  std::vector<Int> add_;
  std::vector<Int> remove_;
};

/// Conjunction of residue sets. An empty system accepts everything.
class ResidueSystem {
 public:
  ResidueSystem() = default;
  explicit ResidueSystem(std::vector<ResidueSet> factors) : factors_(std::move(factors)) {}

  const std::vector<ResidueSet>& factors() const { return factors_; }
  bool contains(Int gamma) const;

  /// Members of [lo, hi], ascending.
  std::vector<Int> accepted(Int lo, Int hi) const;

 private:
  std::vector<ResidueSet> factors_;
};

}  // namespace primestep
