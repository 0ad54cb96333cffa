#include "voa24/catalog.hpp"

#include "voa24/algebra_io.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace voa24 {

namespace {

TwistElement zero_twist(const SemisimpleAlgebra& g) {
  TwistElement h;
  for (const auto& s : g.ideals) h.parts.push_back(zero_weight(s.type));
  return h;
}

CaseRow make_row(std::string id, const std::string& g_text, const std::string& f_text,
                 const std::vector<std::pair<int, int>>& twist_nodes,
                 Order2Case oc = Order2Case::General1, bool regression = false) {
  CaseRow row;
  row.id = std::move(id);
  row.g = parse_algebra(g_text);
  row.f = parse_algebra(f_text);
  row.h = zero_twist(row.g);
  for (auto [ideal, node] : twist_nodes)
    row.h.parts[ideal] = fundamental_weight(row.g.ideals[ideal].type, node);
  row.order2_case = oc;
  row.regression = regression;
  return row;
}

std::vector<CaseRow> build_rows() {
  std::vector<CaseRow> rows;

  // series (A): g = B_{n,2}^{12/n}, f = A_{2n,1}^{12/n}, twist w1 on the
  // first ideal; n = 1 appears in its canonical A1 form
  rows.push_back(make_row("A:n=1", "A1,4^12", "A2,1^12", {{0, 1}}));
  rows.push_back(make_row("A:n=2", "B2,2^6", "A4,1^6", {{0, 1}}));
  rows.push_back(make_row("A:n=3", "B3,2^4", "A6,1^4", {{0, 1}}));
  rows.push_back(make_row("A:n=4", "B4,2^3", "A8,1^3", {{0, 1}}));
  rows.push_back(make_row("A:n=6", "B6,2^2", "A12,1^2", {{0, 1}}));
  rows.push_back(make_row("A:n=12", "B12,2", "A24,1", {{0, 1}}, Order2Case::Dioph2));

  // series (B): g = D_{2n,2}^{4/n} B_{n,1}^{8/n}, f = A_{4n-1,1}^{4/n} D_{2n+1,1}^{4/n}.
  // For n = 1 everything collapses to A1 ideals and the twist w1 on the
  // leading D2 ideal becomes (w1, w1) on its two A1 components.
  rows.push_back(make_row("B:n=1", "A1,2^16", "A3,1^8", {{0, 1}, {1, 1}},
                          Order2Case::General1, /*regression=*/true));
  rows.push_back(make_row("B:n=2", "D4,2^2 B2,1^4", "A7,1^2 D5,1^2", {{0, 1}}));
  rows.push_back(make_row("B:n=4", "D8,2 B4,1^2", "A15,1 D9,1", {{0, 1}},
                          Order2Case::SimpleCurrent3));

  // series (C): g = D_{2n+1,2}^{4/n} A_{2n-1,1}^{4/n}, f = A_{4n+1,1}^{4/n} X_{n,1},
  // twist w_n on each trailing A_{2n-1} ideal
  rows.push_back(
      make_row("C:n=1", "A3,2^4 A1,1^4", "A5,1^4 D4,1", {{4, 1}, {5, 1}, {6, 1}, {7, 1}}));
  rows.push_back(make_row("C:n=2", "D5,2^2 A3,1^2", "A9,1^2 D6,1", {{2, 2}, {3, 2}}));
  rows.push_back(make_row("C:n=4", "D9,2 A7,1", "A17,1 E7,1", {{1, 4}}));

  rows.push_back(make_row("D", "C4,1^4", "E6,1^4", {{0, 4}}));
  rows.push_back(make_row("E", "D6,2 B3,1^2 C4,1", "A11,1 D7,1 E6,1", {{0, 1}}));

  for (auto& row : rows) {
    if (row.id == "B:n=1")
      row.notes.push_back(
          "twist read on the split D2 ideal: w1 of D2 is (w1, w1) on A1+A1");
    if (row.order2_case == Order2Case::SimpleCurrent3) {
      row.notes.push_back(
          "level-2 D8 modules of integral lowest weight >= 2: L(2,2w7) and "
          "L(2,2w8); both are self-dual simple currents with fusion "
          "L(2,2w7) x L(2,2w8) = L(2,2w1)");
      row.notes.push_back(
          "order-2 witness used by the simple-current analysis: (h|w8) = 1/2");
    }
    if (row.regression)
      row.notes.push_back("regression row: uniqueness for this algebra is prior work");
  }
  return rows;
}

std::vector<NiemeierEntry> build_niemeier() {
  const std::pair<const char*, const char*> entries[] = {
      {"D24", "D24,1"},
      {"D16E8", "D16,1 E8,1"},
      {"E8^3", "E8,1^3"},
      {"A24", "A24,1"},
      {"D12^2", "D12,1^2"},
      {"A17E7", "A17,1 E7,1"},
      {"D10E7^2", "D10,1 E7,1^2"},
      {"A15D9", "A15,1 D9,1"},
      {"D8^3", "D8,1^3"},
      {"A12^2", "A12,1^2"},
      {"A11D7E6", "A11,1 D7,1 E6,1"},
      {"E6^4", "E6,1^4"},
      {"A9^2D6", "A9,1^2 D6,1"},
      {"D6^4", "D6,1^4"},
      {"A8^3", "A8,1^3"},
      {"A7^2D5^2", "A7,1^2 D5,1^2"},
      {"A6^4", "A6,1^4"},
      {"A5^4D4", "A5,1^4 D4,1"},
      {"D4^6", "D4,1^6"},
      {"A4^6", "A4,1^6"},
      {"A3^8", "A3,1^8"},
      {"A2^12", "A2,1^12"},
      {"A1^24", "A1,1^24"},
  };
  std::vector<NiemeierEntry> out;
  for (const auto& [name, text] : entries)
    out.push_back(NiemeierEntry{name, parse_algebra(text)});
  out.push_back(NiemeierEntry{"Leech", SemisimpleAlgebra{}});
  return out;
}

}  // namespace

const std::vector<CaseRow>& rows() {
  static const std::vector<CaseRow> r = build_rows();
  return r;
}

const CaseRow* find_row(std::string_view id) {
  for (const auto& row : rows())
    if (row.id == id) return &row;
  return nullptr;
}

const std::vector<NiemeierEntry>& niemeier_entries() {
  static const std::vector<NiemeierEntry> n = build_niemeier();
  return n;
}

const NiemeierEntry* niemeier_lookup(const SemisimpleAlgebra& f) {
  for (const auto& s : f.ideals)
    if (s.level != 1) return nullptr;  // catalog stores level-1 root systems
  for (const auto& entry : niemeier_entries())
    if (!entry.root_system.ideals.empty() && entry.root_system.same_algebra(f))
      return &entry;
  return nullptr;
}

Constants constants() { return Constants{}; }

nlohmann::ordered_json catalog_json() {
  nlohmann::ordered_json doc;
  doc["version"] = "1";
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : rows()) {
    nlohmann::ordered_json r;
    r["id"] = row.id;
    r["g"] = print_algebra(row.g);
    r["f"] = print_algebra(row.f);
    nlohmann::ordered_json h = nlohmann::ordered_json::array();
    for (const auto& part : row.h.parts) {
      nlohmann::ordered_json coords = nlohmann::ordered_json::array();
      for (Eigen::Index i = 0; i < part.size(); ++i) coords.push_back(to_string(part[i]));
      h.push_back(coords);
    }
    r["h"] = h;
    switch (row.order2_case) {
      case Order2Case::General1: r["order2_case"] = "commutant"; break;
      case Order2Case::Dioph2: r["order2_case"] = "character"; break;
      case Order2Case::SimpleCurrent3: r["order2_case"] = "simple-current"; break;
    }
    r["regression"] = row.regression;
    r["notes"] = row.notes;
    doc["rows"].push_back(r);
  }
  doc["niemeier"] = nlohmann::ordered_json::array();
  for (const auto& entry : niemeier_entries()) {
    nlohmann::ordered_json e;
    e["name"] = entry.name;
    e["root_system"] = entry.root_system.ideals.empty()
                           ? "(no roots)"
                           : print_algebra(entry.root_system);
    e["rank"] = entry.root_system.rank();
    doc["niemeier"].push_back(e);
  }
  const Constants c = constants();
  doc["constants"]["dim_v2"] = c.dim_v2;
  doc["constants"]["j_constant_shift"] = c.j_constant_shift;
  doc["constants"]["leech_entry_root_rank"] = c.leech_entry_root_rank;
  return doc;
}

}  // namespace voa24
