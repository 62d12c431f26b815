#include "primestep/residue_classes.hpp"

#include <string>

namespace primestep {

std::string_view to_string(ResidueClass c) {
  switch (c) {
    case ResidueClass::E: return "E";
    case ResidueClass::O3: return "O3";
    case ResidueClass::OMinus: return "O-";
    case ResidueClass::OPlus: return "O+";
  }
  return "?";
}

GammaIndex classify(Int n) {
  if (n <= 1) throw DomainError("classify: n must be > 1, got " + std::to_string(n));
  switch (n % 6) {
    case 0:
    case 2:
    case 4: return {ResidueClass::E, n / 2};
    case 3: return {ResidueClass::O3, (n + 3) / 6};
    case 5: return {ResidueClass::OMinus, n / 6 + 1};
    default: return {ResidueClass::OPlus, n / 6};
  }
}

Int value(GammaIndex g) {
  if (g.gamma < 1) throw DomainError("value: gamma must be >= 1, got " + std::to_string(g.gamma));
  switch (g.cls) {
    case ResidueClass::E: return checked_mul(2, g.gamma);
    case ResidueClass::O3: return checked_sub(checked_mul(6, g.gamma), 3);
    case ResidueClass::OMinus: return checked_sub(checked_mul(6, g.gamma), 1);
    case ResidueClass::OPlus: return checked_add(checked_mul(6, g.gamma), 1);
  }
  throw DomainError("value: bad class");
}

}  // namespace primestep
