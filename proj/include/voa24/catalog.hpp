#pragma once

#include "voa24/affine.hpp"

#include "json.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace voa24 {

// Static case data: the fourteen (g, f, h) rows the verifier covers, the
// twenty-four Niemeier root systems, and the holomorphic character
// constants at central charge 24.

enum class Order2Case { General1, Dioph2, SimpleCurrent3 };

struct CaseRow {
  std::string id;        // "A:n=1" .. "A:n=12", "B:n=1".., "C:n=1".., "D", "E"
  SemisimpleAlgebra g;   // weight-one algebra of the VOA under verification
  SemisimpleAlgebra f;   // weight-one algebra of the target lattice VOA
  TwistElement h;        // inner twist, aligned with g.ideals
  Order2Case order2_case = Order2Case::General1;
  bool regression = false;  // covered by earlier uniqueness results
  std::vector<std::string> notes;
};

const std::vector<CaseRow>& rows();
const CaseRow* find_row(std::string_view id);

struct NiemeierEntry {
  std::string name;             // "A2^12", ..., "Leech"
  SemisimpleAlgebra root_system;  // level-1 ideals; empty for the Leech lattice
};

const std::vector<NiemeierEntry>& niemeier_entries();

/// Entry whose root system matches f (all levels must be 1), or nullptr.
const NiemeierEntry* niemeier_lookup(const SemisimpleAlgebra& f);

struct Constants {
  long dim_v2 = 196884;          // graded dimension at weight 2, from j - 744
  long j_constant_shift = 744;
  long leech_entry_root_rank = 0;
};

Constants constants();

/// Versioned JSON export: {version, rows, niemeier, constants}.
nlohmann::ordered_json catalog_json();

}  // namespace voa24
