#pragma once

#include "voa24/affine.hpp"

#include <string>
#include <string_view>

namespace voa24 {

// Textual form of semisimple algebras, mirroring the usual X_{n,k}^m
// notation: ideal = FAMILY RANK "," LEVEL, optional "^" MULT, ideals
// separated by spaces.  Examples: "B12,2", "A1,4^12", "D6,2 B3,1^2 C4,1".
// Parsing canonicalizes (B1 doubles its level to become A1, C2 becomes B2,
// D2 splits into A1 A1, D3 becomes A3).

SemisimpleAlgebra parse_algebra(std::string_view text);

/// Grouped rendering in the ideal order stored on the algebra.
std::string print_algebra(const SemisimpleAlgebra& g);

/// Grouped rendering of the sorted canonical key; equal algebras print
/// identically.
std::string canonical_string(const SemisimpleAlgebra& g);

/// "w1+2w3" style rendering of a weight in the fundamental basis.
std::string print_weight(const Weight& w);

/// Comma-separated coordinates, the CLI input format.
std::string weight_coords(const Weight& w);
Weight parse_weight(std::string_view text, int rank);

std::string print_twist(const TwistElement& h);

}  // namespace voa24
