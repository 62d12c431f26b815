#include "primestep/bounds.hpp"

namespace primestep {

std::string_view to_string(PlusBranch b) {
  switch (b) {
    case PlusBranch::Seed: return "seed";
    case PlusBranch::Plus1: return "plus1";
    case PlusBranch::Plus2: return "plus2";
  }
  return "?";
}

template struct BasicBounds<Int>;
template RangeBounds next_bounds(const RangeBounds&);
template BigRangeBounds next_bounds(const BigRangeBounds&);

}  // namespace primestep
