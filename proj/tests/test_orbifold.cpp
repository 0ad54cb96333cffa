#include "voa24/orbifold.hpp"

#include "voa24/algebra_io.hpp"

#include "doctest.h"

#include <algorithm>
#include <set>

using namespace voa24;

namespace {

std::set<std::string> names(const std::vector<SemisimpleAlgebra>& list) {
  std::set<std::string> out;
  for (const auto& g : list) out.insert(canonical_string(g));
  return out;
}

std::set<std::string> parse_names(std::initializer_list<const char*> texts) {
  std::set<std::string> out;
  for (const char* t : texts) out.insert(canonical_string(parse_algebra(t)));
  return out;
}

}  // namespace

TEST_CASE("dimension identity and ratio") {
  CHECK(montague_dim(parse_algebra("A1,4^12")) == 96);
  CHECK(montague_dim(parse_algebra("C4,1^4")) == 312);
  CHECK(montague_dim(parse_algebra("B12,2")) == 624);
  CHECK(ratio(parse_algebra("A1,4^12")) == 3);
  CHECK(ratio(parse_algebra("D6,2 B3,1^2 C4,1")) == 12);
  CHECK(ratio(parse_algebra("B2,2^6")) == 5);
}

TEST_CASE("candidate ideal pools") {
  auto contains = [](const std::vector<LeveledSimple>& pool, Family f, int n, long k) {
    return std::find(pool.begin(), pool.end(),
                     LeveledSimple{SimpleType{f, n}, k}) != pool.end();
  };

  auto r3 = candidate_ideals(rat(3), 96);
  CHECK(contains(r3, Family::A, 2, 1));
  CHECK(contains(r3, Family::B, 2, 1));  // C2 in its canonical spelling
  CHECK(contains(r3, Family::D, 4, 2));
  CHECK(contains(r3, Family::A, 5, 2));
  CHECK(contains(r3, Family::F, 4, 3));

  auto r12 = candidate_ideals(rat(12), 312);
  CHECK(contains(r12, Family::A, 11, 1));
  CHECK(contains(r12, Family::D, 7, 1));
  CHECK(contains(r12, Family::E, 6, 1));
  CHECK(contains(r12, Family::C, 11, 1));
  CHECK(r12.size() == 4);

  CHECK(candidate_ideals(rat(1000), 24).empty());

  // levels are forced: dual Coxeter = ratio * level exactly
  for (const auto& s : r3) CHECK(dual_coxeter(s.type) == 3 * s.level);
}

TEST_CASE("classification search: A:n=1") {
  auto cs = candidate_search(parse_algebra("A1,4^12"));

  // the six textbook candidates ...
  const auto expected6 = parse_names({
      "D4,2^2 C2,1^4",
      "D4,2 A2,1 C2,1^6",
      "D4,2 A2,1^6 C2,1^2",
      "A2,1^2 C2,1^8",
      "A2,1^7 C2,1^4",
      "A2,1^12",
  });
  // ... plus one more multiset over the same pool with the same dimension,
  // eliminated at stage 3 by the exact fixed-point count
  auto expected7 = expected6;
  expected7.insert(canonical_string(parse_algebra("D4,2^2 A2,1^5")));

  CHECK(names(cs.stage2) == expected7);
  CHECK(names(cs.stage3) == parse_names({"A2,1^12"}));

  // monotone stages
  auto s1 = names(cs.stage1), s2 = names(cs.stage2), s3 = names(cs.stage3);
  for (const auto& x : s3) CHECK(s2.count(x));
  for (const auto& x : s2) CHECK(s1.count(x));
}

TEST_CASE("classification search: A:n=2") {
  auto cs = candidate_search(parse_algebra("B2,2^6"));
  CHECK(names(cs.stage2) ==
        parse_names({"C4,1^4", "C4,1^2 A4,1^3", "A4,1^6"}));
  CHECK(names(cs.stage3) == parse_names({"A4,1^6"}));
}

TEST_CASE("classification search: B:n=1 excludes G2 numerically") {
  auto cs = candidate_search(parse_algebra("A1,2^16"));
  bool has_g2_in_pool = false;
  for (const auto& s : cs.pool)
    if (s.type == SimpleType{Family::G, 2}) has_g2_in_pool = true;
  CHECK(has_g2_in_pool);
  for (const auto& cand : cs.stage2)
    for (const auto& s : cand.ideals)
      CHECK(s.type != SimpleType{Family::G, 2});
  CHECK(names(cs.stage2) == parse_names({"A3,1^8"}));
  CHECK(names(cs.stage3) == parse_names({"A3,1^8"}));
}

TEST_CASE("classification search: two-candidate rows") {
  auto b2 = candidate_search(parse_algebra("D4,2^2 B2,1^4"));
  CHECK(names(b2.stage1) == parse_names({"A7,1 D9,2", "A7,1^2 D5,1^2"}));
  CHECK(names(b2.stage3) == parse_names({"A7,1^2 D5,1^2"}));

  auto c2 = candidate_search(parse_algebra("D5,2^2 A3,1^2"));
  CHECK(names(c2.stage1) == parse_names({"A9,1^2 D6,1", "D6,1^4"}));
  CHECK(names(c2.stage3) == parse_names({"A9,1^2 D6,1"}));

  auto c4 = candidate_search(parse_algebra("D9,2 A7,1"));
  CHECK(names(c4.stage1) == parse_names({"A17,1 E7,1", "D10,1 E7,1^2"}));
  CHECK(names(c4.stage3) == parse_names({"A17,1 E7,1"}));

  auto d = candidate_search(parse_algebra("C4,1^4"));
  CHECK(names(d.stage1) == parse_names({"E6,1^4", "A11,1 D7,1 E6,1"}));
  CHECK(names(d.stage3) == parse_names({"E6,1^4"}));

  auto e = candidate_search(parse_algebra("D6,2 B3,1^2 C4,1"));
  CHECK(names(e.stage1) == parse_names({"E6,1^4", "A11,1 D7,1 E6,1"}));
  CHECK(names(e.stage3) == parse_names({"A11,1 D7,1 E6,1"}));
}

TEST_CASE("classification search: final survivor equals f on all rows") {
  for (const auto& row : rows()) {
    CAPTURE(row.id);
    auto cs = candidate_search(row.g);
    REQUIRE(cs.stage3.size() == 1);
    CHECK(cs.stage3[0].same_algebra(row.f));
  }
}

TEST_CASE("search determinism and worker independence") {
  auto a = candidate_search(parse_algebra("A1,4^12"));
  auto b = candidate_search(parse_algebra("A1,4^12"));
  SearchOptions par;
  par.workers = 4;
  auto c = candidate_search(parse_algebra("A1,4^12"), par);
  auto render = [](const CandidateSet& cs) {
    std::string s;
    for (const auto& g : cs.stage1) s += canonical_string(g) + ";";
    s += "|";
    for (const auto& g : cs.stage2) s += canonical_string(g) + ";";
    s += "|";
    for (const auto& g : cs.stage3) s += canonical_string(g) + ";";
    return s;
  };
  CHECK(render(a) == render(b));
  CHECK(render(a) == render(c));
}

TEST_CASE("diophantine enumeration") {
  auto inst = dioph_check(196884, 45450, {53130, 98304});
  REQUIRE(inst.solutions.size() == 1);
  CHECK(inst.solutions[0] == std::vector<long>{1, 1});

  auto trivial = dioph_check(10, 10, {3, 5});
  REQUIRE(trivial.solutions.size() == 1);
  CHECK(trivial.solutions[0] == std::vector<long>{0, 0});

  CHECK(dioph_check(196884, 45450, {53130}).solutions.empty());

  // solution count invariant under coefficient permutation
  auto p = dioph_check(100, 10, {6, 9, 20});
  auto q = dioph_check(100, 10, {20, 6, 9});
  CHECK(p.solutions.size() == q.solutions.size());
}

TEST_CASE("weight-2 counting identity is rebuilt from the module list") {
  const LeveledSimple b12{SimpleType{Family::B, 12}, 2};
  auto ad = vacuum_module_dioph(b12, 196884);

  CHECK(ad.instance.base == 45450);
  std::multiset<long> coeffs(ad.instance.coefficients.begin(),
                             ad.instance.coefficients.end());
  CHECK(coeffs == std::multiset<long>{53130, 98304});

  // classes: 2w1 is the only integral weight-one module; w5 and w1+w12
  // sit at weight two; w10 is integral at weight three
  REQUIRE(ad.level1_classes.size() == 1);
  CHECK(to_longs(ad.level1_classes[0]) ==
        std::vector<long>{2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0});
  CHECK(ad.level2_classes.size() == 2);
  CHECK(ad.higher_integral.size() == 1);
  CHECK(ad.fractional_classes.size() == 11);

  REQUIRE(ad.instance.solutions.size() == 1);
  CHECK(ad.instance.solutions[0] == std::vector<long>{1, 1});
}

TEST_CASE("verify_case") {
  VerifyOptions opts;
  const CaseRow* d = find_row("D");
  REQUIRE(d);
  auto rep = verify_case(*d, opts);
  CHECK(rep.verdict);
  REQUIRE(rep.stages.stage3.size() == 1);
  CHECK(canonical_string(rep.stages.stage3[0]) ==
        canonical_string(parse_algebra("E6,1^4")));

  const CaseRow* a12 = find_row("A:n=12");
  REQUIRE(a12);
  auto rep12 = verify_case(*a12, opts);
  CHECK(rep12.verdict);
  bool dioph_checked = false;
  for (const auto& c : rep12.checks)
    if (c.name == "diophantine") {
      CHECK(c.status == "pass");
      dioph_checked = true;
    }
  CHECK(dioph_checked);

  const CaseRow* b1 = find_row("B:n=1");
  REQUIRE(b1);
  auto rep_b1 = verify_case(*b1, opts);
  CHECK(rep_b1.verdict);
  bool flagged = false;
  for (const auto& note : rep_b1.annotations)
    if (note.find("regression") != std::string::npos) flagged = true;
  CHECK(flagged);
}

TEST_CASE("report json schema fields") {
  const CaseRow* e = find_row("E");
  REQUIRE(e);
  auto rep = verify_case(*e, VerifyOptions{});
  auto doc = report_json(rep);
  for (const char* key : {"case", "g", "f", "h", "checks", "stages", "verdict"})
    CHECK(doc.contains(key));
  CHECK(doc["verdict"] == "pass");
  CHECK(doc["stages"].size() == 4);  // pool + three survivor stages
  for (const auto& c : doc["checks"]) {
    CHECK(c.contains("name"));
    CHECK(c.contains("status"));
    CHECK(c.contains("values"));
  }
}
