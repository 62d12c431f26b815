#pragma once

#include <span>
#include <vector>

#include "primestep/checked.hpp"
#include "primestep/pseudoprime_families.hpp"
#include "primestep/residue_classes.hpp"

// Ground truth for the tests and for `verify`. Deliberately naive and
// independent of the generator/Diophantine code: it only shares
// residue_classes (and the PseudoprimeFamily record, read as kind + parameter).
namespace primestep::oracle {

class PrimeTable {
 public:
  explicit PrimeTable(Int limit);

  Int limit() const { return limit_; }
  bool is_prime(Int n) const;
  std::vector<Int> primes() const;

 private:
  Int limit_;
  std::vector<bool> bits_;
};

/// Sieve of Eratosthenes on [0, limit]. Throws DomainError for limit < 2.
PrimeTable sieve(Int limit);

/// Trial division; for spot checks beyond any sieve.
bool is_prime(Int n);

/// {gamma <= gamma_max : value(cls, gamma) prime}. cls must be O- or O+.
std::vector<Int> gamma_primes(ResidueClass cls, Int gamma_max);
std::vector<Int> gamma_primes(const PrimeTable& table, ResidueClass cls, Int gamma_max);

/// True when gamma is not produced by the family's generator, decided by
/// dividing value(gamma) by the family modulus directly.
bool survives(const PseudoprimeFamily& f, Int gamma);

/// gamma in [1, gamma_max] surviving every family. Throws DomainError for an empty list.
std::vector<Int> brute_force_intersection(std::span<const PseudoprimeFamily> families, Int gamma_max);

}  // namespace primestep::oracle
