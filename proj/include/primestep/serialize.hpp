#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "primestep/recursion.hpp"

namespace primestep {

/// "0-3,5,7-12": ascending values with consecutive runs collapsed; "-" when empty.
std::string format_runs(const std::vector<Int>& sorted);

// Line-oriented piece dump:
//
//   state step=1 r_minus=21 r_plus=29
//   piece class=O- index=0 step=0 lo=1 hi=6 families=1 factors=1
//     factor modulus=7 allowed=0-5 add=- remove=-
//
// One `piece` record per piece; its residue constraint is the conjunction of
// the `factor` lines that follow it.
void write_state_text(std::ostream& os, const StepState& state);

/// step,class,gamma,value,is_prime,piece_index. Accepted gammas only unless all_rows.
void write_rows_csv(std::ostream& os, const StepState& state, bool all_rows);

/// {"schema": 1, "step", "bounds", "pieces": [...], "rows": [...]}.
nlohmann::json state_to_json(const StepState& state, bool all_rows);

}  // namespace primestep
