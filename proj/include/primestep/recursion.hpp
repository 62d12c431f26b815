#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "primestep/bounds.hpp"
#include "primestep/pseudoprime_families.hpp"
#include "primestep/residue_classes.hpp"
#include "primestep/residue_set.hpp"

namespace primestep {

// Which parameters feed the families of a new step.
//   PrimeOnly:  O- gets MinusAlpha over prime alpha+ and MinusBeta over prime alpha-;
//               O+ gets Plus1Alpha over prime alpha+ and Plus2Alpha over prime alpha-.
//   AllNumbers: O- gets MinusAlpha over every alpha <= r+; O+ gets Plus1Alpha over
//               every alpha <= r+ and Plus2Alpha over every alpha <= r-.
enum class FamilySelection { PrimeOnly, AllNumbers };

struct DriverOptions {
  FamilySelection selection = FamilySelection::PrimeOnly;
  /// Families are CRT-merged into one leading residue set while its modulus stays <= merge_cap.
  Int merge_cap = 1000;
};

/// A sub-range of one class together with the residue constraint valid on it.
struct Piece {
  std::uint32_t step;
  Interval range;
  std::size_t family_count;
  std::shared_ptr<const ResidueSystem> constraint;
};

struct StepState {
  std::uint32_t step = 0;
  RangeBounds bounds;
  std::vector<Int> primes_minus;  // gamma with 6 gamma - 1 prime, gamma <= r_minus
  std::vector<Int> primes_plus;   // gamma with 6 gamma + 1 prime, gamma <= r_plus
  std::vector<Piece> pieces_minus;
  std::vector<Piece> pieces_plus;

  const std::vector<Int>& primes(ResidueClass c) const;
  const std::vector<Piece>& pieces(ResidueClass c) const;
  Int bound(ResidueClass c) const;
};

/// Overflow while building step `step`.
class StepOverflow : public ArithmeticError {
 public:
  StepOverflow(std::uint32_t step, const std::string& what)
      : ArithmeticError("step " + std::to_string(step) + ": " + what), step_(step) {}
  std::uint32_t step() const { return step_; }

 private:
  std::uint32_t step_;
};

/// Families used to build the piece of step state.step + 1 for class `target`,
/// ordered by ascending modulus.
std::vector<PseudoprimeFamily> select_families(const StepState& state, ResidueClass target,
                                               FamilySelection selection);

/// Residue sets of the families, the smallest ones merged while the lcm stays <= merge_cap.
ResidueSystem build_constraint(const std::vector<PseudoprimeFamily>& families, Int merge_cap);

/// Step 0: the alpha = 1 generators on [1, 6] (O-) and [1, 4] (O+).
StepState initial_state(const DriverOptions& options = {});

/// Step s -> s + 1. Earlier pieces are shared, the new piece covers (r_s, r_{s+1}].
StepState advance(const StepState& state, const DriverOptions& options = {});

/// Membership tests per piece in check_invariants before it switches to a strided sample.
inline constexpr Int kPointwiseBudget = 200'000'000;

/// Empty when every invariant holds, else a description of the first violation:
/// pieces tile [1, bound] in step order, and primes are exactly the gammas
/// accepted pointwise by the piece covering them.
std::optional<std::string> check_invariants(const StepState& state);

struct StepFailure {
  std::uint32_t step;
  std::string message;
  bool overflow = false;
};

struct RunResult {
  std::vector<StepState> states;
  std::optional<StepFailure> failure;
};

/// States 0..s_max. On overflow or an invariant violation the states built so
/// far are returned together with the failure.
RunResult run(std::uint32_t s_max, const DriverOptions& options = {}, bool validate = true);

}  // namespace primestep
