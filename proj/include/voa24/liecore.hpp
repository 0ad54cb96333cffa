#pragma once

#include "voa24/rational.hpp"

#include <optional>
#include <vector>

namespace voa24 {

// Exact root-system arithmetic for the nine simple families, in the
// Bourbaki node labeling throughout.  Weights are coordinate vectors in
// the fundamental-weight basis; the invariant form is normalized so that
// long roots have squared length 2.

enum class Family : int { A, B, C, D, E, F, G };

char family_letter(Family f);
std::optional<Family> family_from_letter(char c);

struct SimpleType {
  Family family;
  int rank;

  friend bool operator==(const SimpleType&, const SimpleType&) = default;
  friend auto operator<=>(const SimpleType&, const SimpleType&) = default;
};

/// True if (family, rank) is one of the canonical representatives:
/// A n>=1, B n>=2, C n>=3, D n>=4, E 6..8, F 4, G 2.
bool is_canonical(Family f, int rank);

/// Canonical components of a raw type.  Handles the identifications
/// B1=A1, C1=A1, C2=B2, D2=A1+A1, D3=A3.  D2 is the only multi-part case.
std::vector<SimpleType> canonical_components(Family f, int rank);

/// Single-type canonicalization; throws std::invalid_argument on D2
/// (which splits) and on out-of-range input.
SimpleType canonicalize(Family f, int rank);
inline SimpleType canonicalize(SimpleType t) { return canonicalize(t.family, t.rank); }

bool simply_laced(SimpleType t);
std::string type_name(SimpleType t);  // "B12", "E6", ...

using Weight = Vec;

inline constexpr long kDefaultBound = 1'000'000;

/// Cartan matrix, entries A(i,j) = 2(a_i|a_j)/(a_j|a_j).
const Eigen::MatrixXi& cartan_matrix(SimpleType t);

/// Gram matrix of the fundamental weights under the normalized form.
const Mat& quadratic_form(SimpleType t);

/// Positive roots in fundamental-weight coordinates.
const std::vector<IVec>& positive_roots(SimpleType t);

/// Node permutation giving the diagram automorphism -w0 (w0 the longest
/// Weyl element); identity except for A_n, D_odd and E6.  0-based.
const std::vector<int>& lowest_weight_involution(SimpleType t);

Rational inner(SimpleType t, const Weight& a, const Weight& b);
Weight highest_root(SimpleType t);
Weight rho(SimpleType t);
Weight fundamental_weight(SimpleType t, int node);  // node is 1-based
Weight zero_weight(SimpleType t);
int dual_coxeter(SimpleType t);
long dim_simple(SimpleType t);
long num_positive_roots(SimpleType t);

/// (w | theta0) as an integer; for dominant integral w this is the level.
long highest_root_pairing(SimpleType t, const Weight& w);

bool is_dominant_integral(SimpleType t, const Weight& w);

/// Dimension of the irreducible module L(lambda), exact product formula
/// over the positive roots.
long weyl_dim(SimpleType t, const Weight& lambda);

/// Full weight support of L(lambda) (no multiplicities), enumerated by
/// closing lambda under downward simple-root strings.
std::vector<Weight> weight_support(SimpleType t, const Weight& lambda,
                                   long bound = kDefaultBound);

/// min over the support of L(lambda) of (h|mu) for dominant h, computed
/// as (h|w0(lambda)) through the -w0 diagram automorphism.
Rational min_pairing(SimpleType t, const Weight& h, const Weight& lambda);

Weight apply_node_permutation(const std::vector<int>& perm, const Weight& w);

}  // namespace voa24
