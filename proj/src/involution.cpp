#include "voa24/involution.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>

namespace voa24 {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

void append_canonical(std::vector<SimpleType>& out, Family f, int rank) {
  if (rank == 0) return;  // empty factor (B0)
  for (SimpleType t : canonical_components(f, rank)) out.push_back(t);
}

std::vector<std::vector<SimpleType>> build_fixed_options(SimpleType t) {
  std::vector<std::vector<SimpleType>> raw;
  const int n = t.rank;
  auto opt = [&](std::initializer_list<std::pair<Family, int>> parts) {
    std::vector<SimpleType> o;
    for (auto [f, r] : parts) append_canonical(o, f, r);
    raw.push_back(std::move(o));
  };
  switch (t.family) {
    case Family::A:
      if (n % 2 == 0) {  // A_{2m}
        opt({{Family::B, n / 2}});
      } else if (n >= 3) {  // A_{2m+1}, m >= 1
        opt({{Family::C, (n + 1) / 2}});
        opt({{Family::D, (n + 1) / 2}});
      }
      break;
    case Family::B:
      for (int p = 2; p <= n; ++p) opt({{Family::B, n - p}, {Family::D, p}});
      break;
    case Family::C:
      for (int p = 1; p <= n / 2; ++p) opt({{Family::C, p}, {Family::C, n - p}});
      break;
    case Family::D:
      for (int p = 2; p <= n / 2; ++p) opt({{Family::D, p}, {Family::D, n - p}});
      for (int p = 0; p <= (n - 1) / 2; ++p) opt({{Family::B, p}, {Family::B, n - p - 1}});
      break;
    case Family::E:
      if (n == 6) {
        opt({{Family::F, 4}});
        opt({{Family::C, 4}});
        opt({{Family::A, 1}, {Family::A, 5}});
      } else if (n == 7) {
        opt({{Family::A, 7}});
        opt({{Family::A, 1}, {Family::D, 6}});
      } else {
        opt({{Family::D, 8}});
        opt({{Family::A, 1}, {Family::E, 7}});
      }
      break;
    case Family::F:
      opt({{Family::B, 4}});
      opt({{Family::A, 1}, {Family::C, 3}});
      break;
    case Family::G:
      opt({{Family::A, 1}, {Family::A, 1}});
      break;
  }
  std::vector<std::vector<SimpleType>> out;
  std::set<std::vector<SimpleType>> seen;
  for (auto& o : raw) {
    std::vector<SimpleType> key = o;
    std::sort(key.begin(), key.end());
    if (seen.insert(key).second) out.push_back(std::move(o));
  }
  return out;
}

std::string types_token(const std::vector<SimpleType>& ts) {
  std::vector<SimpleType> s = ts;
  std::sort(s.begin(), s.end());
  std::string out;
  for (const auto& t : s) {
    out += type_name(t);
    out += '.';
  }
  return out;
}

}  // namespace

const std::vector<std::vector<SimpleType>>& fixed_options(SimpleType t) {
  if (!is_canonical(t.family, t.rank)) fail("fixed_options: type not canonical");
  static std::shared_mutex mu;
  static std::map<SimpleType, std::unique_ptr<std::vector<std::vector<SimpleType>>>> cache;
  {
    std::shared_lock lock(mu);
    auto it = cache.find(t);
    if (it != cache.end()) return *it->second;
  }
  auto built = std::make_unique<std::vector<std::vector<SimpleType>>>(build_fixed_options(t));
  std::unique_lock lock(mu);
  auto [it, inserted] = cache.emplace(t, std::move(built));
  return *it->second;
}

std::vector<SimpleType> theta_fixed(SimpleType t) {
  if (!simply_laced(t)) fail("theta_fixed: " + type_name(t) + " is not simply-laced");
  const int n = t.rank;
  std::vector<SimpleType> out;
  switch (t.family) {
    case Family::A:
      if (n % 2 == 0) append_canonical(out, Family::B, n / 2);
      else append_canonical(out, Family::D, (n + 1) / 2);
      break;
    case Family::D:
      if (n % 2 == 0) {
        append_canonical(out, Family::D, n / 2);
        append_canonical(out, Family::D, n / 2);
      } else {
        append_canonical(out, Family::B, n / 2);
        append_canonical(out, Family::B, n / 2);
      }
      break;
    case Family::E:
      if (n == 6) append_canonical(out, Family::C, 4);
      else if (n == 7) append_canonical(out, Family::A, 7);
      else append_canonical(out, Family::D, 8);
      break;
    default:
      break;
  }
  return out;
}

std::string Assignment::signature() const { return signature_with_ideals({}); }

std::string Assignment::signature_with_ideals(
    const std::vector<LeveledSimple>& ideals) const {
  std::vector<std::string> parts;
  for (size_t i = 0; i < choices.size(); ++i) {
    const auto& c = choices[i];
    std::ostringstream os;
    if (i < ideals.size())
      os << type_name(ideals[i].type) << "," << ideals[i].level << "|";
    switch (c.kind) {
      case IdealChoice::Kind::Identity: os << "I"; break;
      case IdealChoice::Kind::Fix: os << "F:" << types_token(c.fixed); break;
      case IdealChoice::Kind::PairSwap:
        os << "S:" << types_token(c.fixed) << "@" << (c.swap_level ? *c.swap_level : 0);
        break;
    }
    parts.push_back(os.str());
  }
  std::sort(parts.begin(), parts.end());
  std::string s;
  for (auto& p : parts) { s += p; s += ';'; }
  return s;
}

std::vector<Assignment> involution_assignments(const SemisimpleAlgebra& f,
                                               const SemisimpleAlgebra& target,
                                               bool allow_swaps, bool allow_identity) {
  const size_t n = f.ideals.size();

  std::map<SimpleType, long> capacity;
  std::map<SimpleType, std::multiset<long>> target_levels;
  for (const auto& s : target.ideals) {
    ++capacity[s.type];
    target_levels[s.type].insert(s.level);
  }

  std::vector<Assignment> results;
  std::set<std::string> seen;
  std::vector<IdealChoice> choices(n);
  std::vector<bool> assigned(n, false);
  std::map<SimpleType, std::vector<long>> level_claims;

  auto take = [&](const std::vector<SimpleType>& fixed) -> bool {
    for (const auto& ty : fixed)
      if (capacity[ty] <= 0) return false;
    for (const auto& ty : fixed) --capacity[ty];
    return true;
  };
  auto give_back = [&](const std::vector<SimpleType>& fixed) {
    for (const auto& ty : fixed) ++capacity[ty];
  };

  std::function<void(size_t)> rec = [&](size_t i) {
    while (i < n && assigned[i]) ++i;
    if (i == n) {
      for (const auto& [ty, c] : capacity)
        if (c != 0) return;
      for (const auto& [ty, claims] : level_claims) {
        std::multiset<long> avail = target_levels[ty];
        for (long lv : claims) {
          auto it = avail.find(lv);
          if (it == avail.end()) return;
          avail.erase(it);
        }
      }
      Assignment a;
      a.choices = choices;
      if (seen.insert(a.signature_with_ideals(f.ideals)).second)
        results.push_back(std::move(a));
      return;
    }

    const LeveledSimple& s = f.ideals[i];
    assigned[i] = true;

    if (allow_identity) {
      std::vector<SimpleType> self{s.type};
      if (take(self)) {
        choices[i] = IdealChoice{IdealChoice::Kind::Identity, self, -1, std::nullopt};
        rec(i + 1);
        give_back(self);
      }
    }

    for (const auto& option : fixed_options(s.type)) {
      if (take(option)) {
        choices[i] = IdealChoice{IdealChoice::Kind::Fix, option, -1, std::nullopt};
        rec(i + 1);
        give_back(option);
      }
    }

    if (allow_swaps) {
      // pair with the first unassigned equal ideal; equal ideals are
      // interchangeable so one partner choice suffices per signature
      for (size_t j = i + 1; j < n; ++j) {
        if (assigned[j] || !(f.ideals[j] == s)) continue;
        std::vector<SimpleType> diag{s.type};
        if (take(diag)) {
          assigned[j] = true;
          const long lv = 2 * s.level;
          choices[i] = IdealChoice{IdealChoice::Kind::PairSwap, diag,
                                   static_cast<int>(j), lv};
          choices[j] = IdealChoice{IdealChoice::Kind::PairSwap, {},
                                   static_cast<int>(i), lv};
          level_claims[s.type].push_back(lv);
          rec(i + 1);
          level_claims[s.type].pop_back();
          assigned[j] = false;
          give_back(diag);
        }
        break;
      }
    }

    assigned[i] = false;
  };
  rec(0);
  return results;
}

UniquenessVerdict uniqueness_check(const SemisimpleAlgebra& f,
                                   const SemisimpleAlgebra& g) {
  UniquenessVerdict v;

  std::set<SimpleType> f_types, g_types;
  for (const auto& s : f.ideals) f_types.insert(s.type);
  for (const auto& s : g.ideals) g_types.insert(s.type);
  for (const auto& t : f_types) {
    if (g_types.count(t)) {
      v.status = UniquenessStatus::HypothesisFails;
      v.note = "shared ideal type " + type_name(t) +
               "; ideal preservation is not forced";
      return v;
    }
  }

  // the hypothesis forces ideal preservation, so swaps are excluded
  v.assignments = involution_assignments(f, g, /*allow_swaps=*/false,
                                         /*allow_identity=*/true);

  // drop the all-identity assignment (the automorphism has order exactly 2)
  std::erase_if(v.assignments, [](const Assignment& a) {
    return std::all_of(a.choices.begin(), a.choices.end(), [](const IdealChoice& c) {
      return c.kind == IdealChoice::Kind::Identity;
    });
  });

  if (v.assignments.size() != 1) {
    v.status = UniquenessStatus::NotUnique;
    v.note = v.assignments.empty() ? "no order-2 fixed-point realization"
                                   : "multiple fixed-point realizations";
    return v;
  }

  for (size_t i = 0; i < f.ideals.size(); ++i) {
    const IdealChoice& c = v.assignments[0].choices[i];
    if (!simply_laced(f.ideals[i].type)) {
      v.status = UniquenessStatus::NotUnique;
      v.note = "no (-1)-lift reference for non-simply-laced " +
               type_name(f.ideals[i].type);
      return v;
    }
    std::vector<SimpleType> want = theta_fixed(f.ideals[i].type);
    std::vector<SimpleType> got = c.fixed;
    std::sort(want.begin(), want.end());
    std::sort(got.begin(), got.end());
    if (c.kind != IdealChoice::Kind::Fix || want != got) {
      v.status = UniquenessStatus::NotUnique;
      v.note = "forced choice on " + type_name(f.ideals[i].type) +
               " differs from the (-1)-lift";
      return v;
    }
  }
  v.status = UniquenessStatus::UniqueConjugateToTheta;
  return v;
}

}  // namespace voa24
