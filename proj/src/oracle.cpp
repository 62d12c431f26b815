#include "primestep/oracle.hpp"

#include <string>

namespace primestep::oracle {

PrimeTable::PrimeTable(Int limit) : limit_(limit) {
  if (limit < 2) throw DomainError("sieve: limit must be >= 2, got " + std::to_string(limit));
  bits_.assign(static_cast<std::size_t>(limit) + 1, true);
  bits_[0] = bits_[1] = false;
  for (Int p = 2; p * p <= limit; ++p) {
    if (!bits_[static_cast<std::size_t>(p)]) continue;
    for (Int m = p * p; m <= limit; m += p) bits_[static_cast<std::size_t>(m)] = false;
  }
}

bool PrimeTable::is_prime(Int n) const {
  if (n < 0 || n > limit_) throw DomainError("PrimeTable: " + std::to_string(n) + " outside the table");
  return bits_[static_cast<std::size_t>(n)];
}

std::vector<Int> PrimeTable::primes() const {
  std::vector<Int> out;
  for (Int n = 2; n <= limit_; ++n)
    if (bits_[static_cast<std::size_t>(n)]) out.push_back(n);
  return out;
}

PrimeTable sieve(Int limit) { return PrimeTable(limit); }

bool is_prime(Int n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (Int d = 3; d <= n / d; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<Int> gamma_primes(const PrimeTable& table, ResidueClass cls, Int gamma_max) {
  if (cls != ResidueClass::OMinus && cls != ResidueClass::OPlus)
    throw DomainError("gamma_primes: class must be O- or O+");
  std::vector<Int> out;
  for (Int g = 1; g <= gamma_max; ++g)
    if (table.is_prime(value(cls, g))) out.push_back(g);
  return out;
}

std::vector<Int> gamma_primes(ResidueClass cls, Int gamma_max) {
  if (gamma_max < 1) throw DomainError("gamma_primes: gamma_max must be >= 1");
  return gamma_primes(sieve(value(cls, gamma_max)), cls, gamma_max);
}

bool survives(const PseudoprimeFamily& f, Int gamma) {
  Int n, d;
  switch (f.kind) {
    case FamilyKind::MinusAlpha:
      n = value(ResidueClass::OMinus, gamma);
      d = 6 * f.parameter + 1;
      break;
    case FamilyKind::MinusBeta:
      n = value(ResidueClass::OMinus, gamma);
      d = 6 * f.parameter - 1;
      break;
    case FamilyKind::Plus1Alpha:
      n = value(ResidueClass::OPlus, gamma);
      d = 6 * f.parameter + 1;
      break;
    case FamilyKind::Plus2Alpha:
      n = value(ResidueClass::OPlus, gamma);
      d = 6 * f.parameter - 1;
      break;
    default: throw DomainError("survives: bad kind");
  }
  // generated means n = d * m with a proper cofactor m > 1
  return !(n % d == 0 && n / d > 1);
}

std::vector<Int> brute_force_intersection(std::span<const PseudoprimeFamily> families, Int gamma_max) {
  if (families.empty()) throw DomainError("brute_force_intersection: no families");
  std::vector<Int> out;
  for (Int g = 1; g <= gamma_max; ++g) {
    bool all = true;
    for (const auto& f : families) {
      if (!survives(f, g)) {
        all = false;
        break;
      }
    }
    if (all) out.push_back(g);
  }
  return out;
}

}  // namespace primestep::oracle
