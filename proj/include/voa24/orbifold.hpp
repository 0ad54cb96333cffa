#pragma once

#include "voa24/catalog.hpp"
#include "voa24/involution.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace voa24 {

// Classification engine: given the weight-one algebra g of the VOA, find
// the possible weight-one algebras of the orbifold by combining the
// dimension identity dim W1 = 2 dim g + 24, the per-ideal constraint
// h_dual = ratio * level, and involution compatibility with g.

/// dim of the orbifold weight-one space: 2 dim(g) + 24.
long montague_dim(const SemisimpleAlgebra& g);

/// (dim W1 - 24)/24 = h_dual/level for every simple ideal of W1.
Rational ratio(const SemisimpleAlgebra& g);

/// All canonical (type, level) with dual Coxeter number = r * level and
/// dimension at most dim_bound, ordered by dimension descending.
std::vector<LeveledSimple> candidate_ideals(const Rational& r, long dim_bound);

struct CandidateSet {
  long target_dim = 0;
  Rational ratio_value;
  std::vector<LeveledSimple> pool;
  std::vector<SemisimpleAlgebra> stage1;  // correct total dimension
  std::vector<SemisimpleAlgebra> stage2;  // per-ideal involution compatibility
  std::vector<SemisimpleAlgebra> stage3;  // a full fixed-point assignment exists
};

struct SearchOptions {
  long bound = kDefaultBound;
  int workers = 1;
};

CandidateSet candidate_search(const SemisimpleAlgebra& g, const SearchOptions& = {});

struct DiophantineInstance {
  long target = 0;
  long base = 0;
  std::vector<long> coefficients;
  std::vector<std::vector<long>> solutions;  // non-negative integer tuples
};

/// All non-negative integer solutions of base + sum c_i x_i = target.
DiophantineInstance dioph_check(long target, long base, std::vector<long> coefficients);

struct AffineDioph {
  LeveledSimple module;
  DiophantineInstance instance;
  std::vector<Weight> level1_classes;       // lowest conformal weight 1
  std::vector<Weight> level2_classes;       // lowest conformal weight 2
  std::vector<Weight> higher_integral;      // integral lowest weight >= 3
  std::vector<Weight> fractional_classes;   // cannot appear in an integral grading
};

/// Rebuild the weight-2 counting identity over a single-ideal algebra:
/// classify the admissible weights by lowest conformal weight, take the
/// vacuum degree-2 dimension as base and the module dimensions of the
/// weight-2 classes as coefficients.
AffineDioph vacuum_module_dioph(const LeveledSimple& s, long target_dim2);

struct CheckResult {
  std::string name;
  std::string status;  // "pass", "fail", "skipped"
  nlohmann::ordered_json values;
};

struct VerificationReport {
  std::string case_id;
  SemisimpleAlgebra g, f;
  TwistElement h;
  std::vector<CheckResult> checks;
  CandidateSet stages;
  HConditionReport h_report;
  UniquenessVerdict uniqueness;
  bool verdict = false;
  std::vector<std::string> annotations;
};

struct VerifyOptions {
  long bound = kDefaultBound;
  int workers = 1;
  bool oracle = false;
};

VerificationReport verify_case(const CaseRow& row, const VerifyOptions& = {});

nlohmann::ordered_json report_json(const VerificationReport& rep);
std::string report_text(const VerificationReport& rep);

nlohmann::ordered_json search_json(const SemisimpleAlgebra& g, const CandidateSet& cs);
std::string search_text(const SemisimpleAlgebra& g, const CandidateSet& cs);

}  // namespace voa24
