#pragma once

#include "voa24/liecore.hpp"

#include <string>
#include <vector>

namespace voa24 {

// Level-k data: admissible dominant weights, lowest conformal weights of
// affine modules, and the weight shift produced by twisting with an inner
// automorphism exp(-2*pi*i*h_(0)).

struct LeveledSimple {
  SimpleType type;
  long level = 1;

  friend bool operator==(const LeveledSimple&, const LeveledSimple&) = default;
  friend auto operator<=>(const LeveledSimple&, const LeveledSimple&) = default;
};

/// Canonicalize a raw (family, rank, level) triple.  The level doubles for
/// B1 (B1 at level k carries the A1 normalization at level 2k); D2 splits
/// into two A1 ideals of the same level.
std::vector<LeveledSimple> canonicalize_leveled(Family f, int rank, long level);

struct SemisimpleAlgebra {
  std::vector<LeveledSimple> ideals;  // order is meaningful (aligns with h)

  long dim() const;
  int rank() const;

  /// Sorted canonical multiset of ideals; two algebras are the same iff
  /// their keys agree.
  std::vector<LeveledSimple> canonical_key() const;
  bool same_algebra(const SemisimpleAlgebra& other) const;
};

using SemisimpleWeight = std::vector<Weight>;  // one part per ideal

struct TwistElement {
  std::vector<Weight> parts;  // one part per ideal, pi-basis coordinates
};

/// All dominant integral weights of level <= s.level, ordered by level
/// then reverse-lexicographically.
std::vector<Weight> dominant_weights(const LeveledSimple& s,
                                     long bound = kDefaultBound);

/// Lowest conformal weight of the level-k module with highest weight
/// lambda: (lambda|lambda+2rho) / (2(k + h_dual)).
Rational conformal_weight(const LeveledSimple& s, const Weight& lambda);

Rational conformal_weight(const SemisimpleAlgebra& g, const SemisimpleWeight& lambda);

/// <h|h> = sum of k_i (h_i|h_i).
Rational norm(const SemisimpleAlgebra& g, const TwistElement& h);

/// Lowest conformal weight of the twisted module attached to lambda:
/// l(lambda) + sum_i min{(h_i|mu) : mu in support} + <h|h>/2.
Rational twisted_weight(const SemisimpleAlgebra& g, const TwistElement& h,
                        const SemisimpleWeight& lambda);

/// d(lambda) = w(lambda) - l(lambda).
Rational deficit(const SemisimpleAlgebra& g, const TwistElement& h,
                 const SemisimpleWeight& lambda);

struct HalfIntegerWitness {
  int ideal = 0;
  Weight lambda;
  Rational value;
};

struct HConditionReport {
  Rational norm_value;
  Rational d_zero;
  Rational min_deficit;
  SemisimpleWeight min_deficit_arg;
  std::vector<int> twist_ideals;
  bool string_condition_ok = true;  // (h_i|theta0) <= 1 on every twist ideal
  bool all_pairings_half_integral = true;
  std::vector<HalfIntegerWitness> witnesses;  // pairings in 1/2 + Z
  bool order2_witness_present = false;
  bool twisted_halfspace_vanishes = false;  // d(0) > 1/2 and min d > -3/2
  long tuples_scanned = 0;
  bool oracle_ran = false;
  bool oracle_agrees = false;
  std::string guard_note;
};

struct HConditionOptions {
  long bound = kDefaultBound;
  bool full_oracle = false;  // brute-force the full weight-tuple product
};

/// Evaluate the twist-element conditions: norm, d(0), the minimum deficit
/// over tuples supported on the twisted ideals, and half-integrality of
/// the pairings (h|lambda) over all single-ideal admissible weights.
HConditionReport check_h_conditions(const SemisimpleAlgebra& g, const TwistElement& h,
                                    const HConditionOptions& opts = {});

/// Dimension of the degree-2 subspace of the level-k vacuum module,
/// k >= 2 (the vacuum singular vector sits at degree k+1 > 2).
long vacuum_degree2_dim(const LeveledSimple& s);

}  // namespace voa24
