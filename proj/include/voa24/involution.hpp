#pragma once

#include "voa24/affine.hpp"

#include <optional>
#include <string>
#include <vector>

namespace voa24 {

// Order-2 automorphisms at the level of type data: the possible semisimple
// fixed-point subalgebras per simple type, the fixed points of a lift of
// -1 on the Cartan subalgebra, and the decision procedure deciding whether
// a fixed-point target pins the automorphism down to that lift.

/// All semisimple fixed-point types of an order-2 automorphism of t, each
/// canonicalized, duplicates removed.  Empty if no option exists (A1).
const std::vector<std::vector<SimpleType>>& fixed_options(SimpleType t);

/// Fixed points of a lift of the (-1)-map on the Cartan subalgebra;
/// defined for simply-laced types only.
std::vector<SimpleType> theta_fixed(SimpleType t);

struct IdealChoice {
  enum class Kind { Identity, Fix, PairSwap };
  Kind kind = Kind::Fix;
  std::vector<SimpleType> fixed;     // canonical fixed types this ideal contributes
  int partner = -1;                  // PairSwap: index of the swapped ideal
  std::optional<long> swap_level;    // PairSwap: level 2l of the diagonal
};

struct Assignment {
  std::vector<IdealChoice> choices;  // aligned with f.ideals
  std::string signature() const;
  std::string signature_with_ideals(const std::vector<LeveledSimple>& ideals) const;
};

/// All ways to realize target as the fixed points of an order-2
/// automorphism of f composed of per-ideal involutions and swaps of equal
/// ideal pairs, deduplicated up to permuting equal ideals.  Matching is on
/// canonical type multisets; levels are enforced only for pair swaps
/// (a swapped pair of level-l ideals fixes a diagonal of level 2l).
std::vector<Assignment> involution_assignments(const SemisimpleAlgebra& f,
                                               const SemisimpleAlgebra& target,
                                               bool allow_swaps = true,
                                               bool allow_identity = true);

enum class UniquenessStatus { UniqueConjugateToTheta, NotUnique, HypothesisFails };

struct UniquenessVerdict {
  UniquenessStatus status = UniquenessStatus::NotUnique;
  std::vector<Assignment> assignments;
  std::string note;
};

/// Decide whether every order-2 automorphism of f with fixed points g is
/// conjugate to the (-1)-lift.  Requires f's ideal types disjoint from
/// g's (ideal-preservation hypothesis); returns HypothesisFails otherwise.
UniquenessVerdict uniqueness_check(const SemisimpleAlgebra& f,
                                   const SemisimpleAlgebra& g);

}  // namespace voa24
