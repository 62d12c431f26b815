#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "primestep/checked.hpp"
#include "primestep/residue_classes.hpp"

namespace primestep {

// Composite-index generators. Each maps (alpha, beta) to the gamma of a
// composite in O- or O+:
//   Minus1: 6ab - a + b   (6a+1)(6b-1) = 6g - 1
//   Minus2: 6ab + a - b   (6a-1)(6b+1) = 6g - 1
//   Plus1:  6ab + a + b   (6a+1)(6b+1) = 6g + 1
//   Plus2:  6ab - a - b   (6a-1)(6b-1) = 6g + 1
// The pipeline uses Minus1 for O-; Minus2 is the same set with the factor roles swapped.
enum class GeneratorKind { Minus1, Minus2, Plus1, Plus2 };

std::string_view to_string(GeneratorKind k);

/// O- for Minus*, O+ for Plus*.
ResidueClass target_class(GeneratorKind k);

/// Raw bilinear form. Any sign of alpha/beta is accepted; overflow is checked.
Int generator_form(GeneratorKind k, Int alpha, Int beta);

/// Generated gamma for alpha, beta >= 1.
Int gamma_composite(GeneratorKind k, Int alpha, Int beta);

/// One generator with alpha fixed, viewed as the progression modulus * beta + offset, beta >= 1.
/// The modulus is the factor 6alpha+-1 that divides every generated value.
struct CompositeFamily {
  GeneratorKind kind;
  Int alpha;
  Int modulus;
  Int offset;

  Int first() const { return modulus + offset; }
  Int residue() const { return floor_mod(offset, modulus); }
};

CompositeFamily composite_family(GeneratorKind k, Int alpha);

/// Sorted gamma' <= gamma_max of the family; steps the progression.
std::vector<Int> enumerate_composites(GeneratorKind k, Int alpha, Int gamma_max);

/// Members of the family in the closed interval [lo, hi].
std::vector<Int> enumerate_composites(const CompositeFamily& f, Int lo, Int hi);

/// Checks g-1(a,-b) = -g+1(a,b) and g-2(a,-b) = -g+2(a,b).
std::pair<bool, bool> check_sign_symmetry(Int alpha, Int beta);

}  // namespace primestep
