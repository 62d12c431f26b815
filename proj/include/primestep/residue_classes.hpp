#pragma once

#include <compare>
#include <string_view>

#include "primestep/checked.hpp"

namespace primestep {

// The four disjoint classes covering n > 1:
//   E = 2g, O3 = 6g - 3, O- = 6g - 1, O+ = 6g + 1, with g >= 1.
enum class ResidueClass { E, O3, OMinus, OPlus };

std::string_view to_string(ResidueClass c);

/// Position of a natural number inside its class. gamma is 1-based.
struct GammaIndex {
  ResidueClass cls;
  Int gamma;

  auto operator<=>(const GammaIndex&) const = default;
};

/// Locates n > 1. Throws DomainError for n <= 1.
GammaIndex classify(Int n);

/// Inverse of classify. Throws DomainError for gamma < 1, ArithmeticError on overflow.
Int value(GammaIndex g);

inline Int value(ResidueClass c, Int gamma) { return value(GammaIndex{c, gamma}); }

}  // namespace primestep
