#include "voa24/involution.hpp"

#include "voa24/algebra_io.hpp"
#include "voa24/catalog.hpp"

#include "doctest.h"

#include <algorithm>
#include <set>

using namespace voa24;

namespace {

SimpleType ty(Family f, int n) { return SimpleType{f, n}; }

std::set<std::vector<SimpleType>> option_set(SimpleType t) {
  std::set<std::vector<SimpleType>> out;
  for (auto o : fixed_options(t)) {
    std::sort(o.begin(), o.end());
    out.insert(o);
  }
  return out;
}

std::vector<SimpleType> types(std::initializer_list<std::pair<Family, int>> parts) {
  std::vector<SimpleType> out;
  for (auto [f, n] : parts) out.push_back(ty(f, n));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("fixed-point options per type") {
  CHECK(option_set(ty(Family::A, 4)) ==
        std::set<std::vector<SimpleType>>{types({{Family::B, 2}})});

  // D7: two inner splittings and four B-pair splittings
  const auto d7 = option_set(ty(Family::D, 7));
  CHECK(d7.size() == 6);
  CHECK(d7.count(types({{Family::A, 1}, {Family::A, 1}, {Family::D, 5}})));
  CHECK(d7.count(types({{Family::A, 3}, {Family::D, 4}})));
  CHECK(d7.count(types({{Family::B, 6}})));
  CHECK(d7.count(types({{Family::A, 1}, {Family::B, 5}})));
  CHECK(d7.count(types({{Family::B, 2}, {Family::B, 4}})));
  CHECK(d7.count(types({{Family::B, 3}, {Family::B, 3}})));

  const auto e6 = option_set(ty(Family::E, 6));
  CHECK(e6.size() == 3);
  CHECK(e6.count(types({{Family::F, 4}})));
  CHECK(e6.count(types({{Family::C, 4}})));
  CHECK(e6.count(types({{Family::A, 1}, {Family::A, 5}})));

  // boundary A3 via the D3 identification
  const auto a3 = option_set(ty(Family::A, 3));
  CHECK(a3.size() == 2);
  CHECK(a3.count(types({{Family::B, 2}})));
  CHECK(a3.count(types({{Family::A, 1}, {Family::A, 1}})));

  // A1 has no semisimple fixed points
  CHECK(fixed_options(ty(Family::A, 1)).empty());
}

TEST_CASE("theta fixed points") {
  auto sorted = [](std::vector<SimpleType> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  CHECK(sorted(theta_fixed(ty(Family::A, 11))) == types({{Family::D, 6}}));
  CHECK(sorted(theta_fixed(ty(Family::D, 7))) ==
        types({{Family::B, 3}, {Family::B, 3}}));
  CHECK(sorted(theta_fixed(ty(Family::E, 7))) == types({{Family::A, 7}}));
  CHECK(sorted(theta_fixed(ty(Family::A, 2))) == types({{Family::A, 1}}));
  CHECK(sorted(theta_fixed(ty(Family::D, 4))) ==
        types({{Family::A, 1}, {Family::A, 1}, {Family::A, 1}, {Family::A, 1}}));
  CHECK_THROWS_AS(theta_fixed(ty(Family::B, 3)), std::invalid_argument);

  // theta always appears among the order-2 fixed-point options
  std::vector<SimpleType> simply;
  for (int n = 2; n <= 17; ++n) simply.push_back(ty(Family::A, n));
  for (int n = 4; n <= 17; ++n) simply.push_back(ty(Family::D, n));
  for (int n : {6, 7, 8}) simply.push_back(ty(Family::E, n));
  for (auto t : simply) {
    auto th = theta_fixed(t);
    std::sort(th.begin(), th.end());
    CHECK(option_set(t).count(th));
  }
}

TEST_CASE("fixed-point rank never exceeds the source rank") {
  std::vector<SimpleType> all;
  for (int n = 1; n <= 12; ++n) all.push_back(ty(Family::A, n));
  for (int n = 2; n <= 12; ++n) all.push_back(ty(Family::B, n));
  for (int n = 3; n <= 12; ++n) all.push_back(ty(Family::C, n));
  for (int n = 4; n <= 12; ++n) all.push_back(ty(Family::D, n));
  for (int n : {6, 7, 8}) all.push_back(ty(Family::E, n));
  all.push_back(ty(Family::F, 4));
  all.push_back(ty(Family::G, 2));

  auto option_rank = [](const std::vector<SimpleType>& option) {
    int r = 0;
    for (const auto& part : option) r += part.rank;
    return r;
  };

  for (auto t : all) {
    int equal = 0, dropped = 0;
    for (const auto& option : fixed_options(t)) {
      const int r = option_rank(option);
      CHECK(r <= t.rank);
      (r == t.rank ? equal : dropped) += 1;
    }
    switch (t.family) {
      case Family::A:  // both outer classes drop rank
        CHECK(equal == 0);
        break;
      case Family::B:
      case Family::C:  // inner splittings only
        CHECK(dropped == 0);
        break;
      case Family::D:  // D_p+D_(n-p) inner, B_p+B_(n-p-1) outer by one
        CHECK(equal == t.rank / 2 - 1);
        CHECK(dropped == (t.rank - 1) / 2 + 1);
        break;
      case Family::E:
        if (t.rank == 6) { CHECK(equal == 1); CHECK(dropped == 2); }
        else { CHECK(equal == 2); CHECK(dropped == 0); }
        break;
      case Family::F:
      case Family::G:
        CHECK(dropped == 0);
        break;
    }
  }
}

TEST_CASE("involution assignments") {
  // each E6 must fix C4; one assignment in total
  auto a1 = involution_assignments(parse_algebra("E6,1^4"), parse_algebra("C4,1^4"));
  REQUIRE(a1.size() == 1);
  for (const auto& c : a1[0].choices) {
    CHECK(c.kind == IdealChoice::Kind::Fix);
    REQUIRE(c.fixed.size() == 1);
    CHECK(c.fixed[0] == ty(Family::C, 4));
  }

  // A3 -> A1+A1 via the D-series option; the C2 = B2 option cannot match
  auto a2 = involution_assignments(parse_algebra("A3,1^8"), parse_algebra("A1,2^16"));
  REQUIRE(a2.size() == 1);
  for (const auto& c : a2[0].choices) {
    CHECK(c.kind == IdealChoice::Kind::Fix);
    CHECK(c.fixed == types({{Family::A, 1}, {Family::A, 1}}));
  }

  // nothing grows rank
  CHECK(involution_assignments(parse_algebra("A1,1^12"), parse_algebra("A2,1^4"))
            .empty());

  // pair swap: two equal ideals fold onto a diagonal of doubled level
  auto a3 = involution_assignments(parse_algebra("A2,1^2"), parse_algebra("A2,2"));
  REQUIRE(a3.size() == 1);
  CHECK(a3[0].choices[0].kind == IdealChoice::Kind::PairSwap);
  CHECK(a3[0].choices[0].swap_level == 2);
  // level mismatch on the diagonal is rejected
  CHECK(involution_assignments(parse_algebra("A2,1^2"), parse_algebra("A2,1")).empty());

  // assignment sets for distinct targets are disjoint
  auto d_set = involution_assignments(parse_algebra("A11,1 D7,1 E6,1"),
                                      parse_algebra("C4,1^4"));
  auto e_set = involution_assignments(parse_algebra("A11,1 D7,1 E6,1"),
                                      parse_algebra("D6,2 B3,1^2 C4,1"));
  CHECK(d_set.empty());
  CHECK(e_set.size() == 1);
}

TEST_CASE("uniqueness decision on all catalog rows") {
  for (const auto& row : rows()) {
    CAPTURE(row.id);
    auto v = uniqueness_check(row.f, row.g);
    CHECK(v.status == UniquenessStatus::UniqueConjugateToTheta);
    REQUIRE(v.assignments.size() == 1);
  }
}

TEST_CASE("uniqueness spot cases") {
  auto e_row = uniqueness_check(parse_algebra("A11,1 D7,1 E6,1"),
                                parse_algebra("D6,2 B3,1^2 C4,1"));
  CHECK(e_row.status == UniquenessStatus::UniqueConjugateToTheta);

  auto a_row = uniqueness_check(parse_algebra("A2,1^12"), parse_algebra("A1,4^12"));
  CHECK(a_row.status == UniquenessStatus::UniqueConjugateToTheta);

  auto d_row = uniqueness_check(parse_algebra("E6,1^4"), parse_algebra("C4,1^4"));
  CHECK(d_row.status == UniquenessStatus::UniqueConjugateToTheta);

  // shared ideal type breaks the ideal-preservation hypothesis
  auto shared = uniqueness_check(parse_algebra("A3,1 A1,1"), parse_algebra("A1,2 B2,1"));
  CHECK(shared.status == UniquenessStatus::HypothesisFails);

  // a realization that differs from the (-1)-lift must not report unique:
  // D6 fixes A1+A1+D4, while theta fixes A3+A3
  auto skew = uniqueness_check(parse_algebra("D6,1"), parse_algebra("A1,1^2 D4,1"));
  CHECK(skew.status == UniquenessStatus::NotUnique);

  // one A5 forced onto C3 is not the (-1)-lift either
  auto mixed = uniqueness_check(parse_algebra("A5,1^2"), parse_algebra("C3,1 A3,1"));
  CHECK(mixed.status == UniquenessStatus::NotUnique);

  // no realization at all
  auto empty = uniqueness_check(parse_algebra("A2,1"), parse_algebra("G2,1"));
  CHECK(empty.status == UniquenessStatus::NotUnique);
  CHECK(empty.assignments.empty());
}
