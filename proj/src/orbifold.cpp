#include "voa24/orbifold.hpp"

#include "voa24/algebra_io.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace voa24 {

namespace {

using json = nlohmann::ordered_json;

/// Deterministic chunked parallel map: fills out[i] = fn(items[i]).
template <class T, class F>
std::vector<char> parallel_flags(const std::vector<T>& items, int workers, F fn) {
  std::vector<char> flags(items.size(), 0);
  if (workers <= 1 || items.size() < 2) {
    for (size_t i = 0; i < items.size(); ++i) flags[i] = fn(items[i]) ? 1 : 0;
    return flags;
  }
  std::vector<std::thread> pool;
  const size_t nw = std::min<size_t>(static_cast<size_t>(workers), items.size());
  for (size_t w = 0; w < nw; ++w) {
    pool.emplace_back([&, w] {
      for (size_t i = w; i < items.size(); i += nw) flags[i] = fn(items[i]) ? 1 : 0;
    });
  }
  for (auto& th : pool) th.join();
  return flags;
}

bool algebra_key_less(const SemisimpleAlgebra& a, const SemisimpleAlgebra& b) {
  return a.canonical_key() < b.canonical_key();
}

json weight_json(const Weight& w) {
  json coords = json::array();
  for (Eigen::Index i = 0; i < w.size(); ++i) coords.push_back(to_string(w[i]));
  return coords;
}

json algebra_list_json(const std::vector<SemisimpleAlgebra>& list) {
  json out = json::array();
  for (const auto& g : list) out.push_back(canonical_string(g));
  return out;
}

}  // namespace

long montague_dim(const SemisimpleAlgebra& g) { return 2 * g.dim() + 24; }

Rational ratio(const SemisimpleAlgebra& g) {
  return rat(montague_dim(g) - 24, 24);
}

std::vector<LeveledSimple> candidate_ideals(const Rational& r, long dim_bound) {
  if (r <= 0) throw std::invalid_argument("ratio must be positive");
  std::vector<LeveledSimple> out;
  auto consider = [&](Family f, int rank) {
    const SimpleType t{f, rank};
    if (dim_simple(t) > dim_bound) return false;
    const Rational level = rat(dual_coxeter(t)) / r;
    if (is_integer(level) && level >= 1)
      out.push_back(LeveledSimple{t, to_long(level)});
    return true;
  };
  for (int n = 1; consider(Family::A, n); ++n) {}
  for (int n = 2; consider(Family::B, n); ++n) {}
  for (int n = 3; consider(Family::C, n); ++n) {}
  for (int n = 4; consider(Family::D, n); ++n) {}
  for (int n : {6, 7, 8}) consider(Family::E, n);
  consider(Family::F, 4);
  consider(Family::G, 2);

  std::sort(out.begin(), out.end(), [](const LeveledSimple& a, const LeveledSimple& b) {
    const long da = dim_simple(a.type), db = dim_simple(b.type);
    if (da != db) return da > db;
    return a < b;
  });
  return out;
}

CandidateSet candidate_search(const SemisimpleAlgebra& g, const SearchOptions& opts) {
  CandidateSet cs;
  cs.target_dim = montague_dim(g);
  cs.ratio_value = ratio(g);
  cs.pool = candidate_ideals(cs.ratio_value, cs.target_dim);

  // stage 1: multisets from the pool with total dimension = target
  std::vector<long> dims;
  for (const auto& s : cs.pool) dims.push_back(dim_simple(s.type));
  std::vector<int> counts(cs.pool.size(), 0);
  long nodes = 0;
  std::function<void(size_t, long)> rec = [&](size_t idx, long remaining) {
    if (++nodes > opts.bound)
      throw ResourceGuard("candidate multiset enumeration exceeds bound");
    if (remaining == 0) {
      SemisimpleAlgebra cand;
      for (size_t i = 0; i < cs.pool.size(); ++i)
        for (int c = 0; c < counts[i]; ++c) cand.ideals.push_back(cs.pool[i]);
      cs.stage1.push_back(std::move(cand));
      return;
    }
    if (idx == cs.pool.size()) return;
    // pool is sorted by dimension descending; nothing after idx is larger
    if (remaining < dims.back()) return;
    for (int c = 0; c * dims[idx] <= remaining; ++c) {
      counts[idx] = c;
      rec(idx + 1, remaining - c * dims[idx]);
    }
    counts[idx] = 0;
  };
  if (!cs.pool.empty()) rec(0, cs.target_dim);
  std::sort(cs.stage1.begin(), cs.stage1.end(), algebra_key_less);

  // stage 2: every ideal must admit an involution option landing inside
  // g's types, or have an equal partner available for a diagonal swap
  std::map<SimpleType, long> g_type_count;
  for (const auto& s : g.ideals) ++g_type_count[s.type];
  auto option_fits = [&](const std::vector<SimpleType>& option) {
    std::map<SimpleType, long> need;
    for (const auto& t : option) ++need[t];
    for (const auto& [t, c] : need) {
      auto it = g_type_count.find(t);
      if (it == g_type_count.end() || it->second < c) return false;
    }
    return true;
  };
  std::map<SimpleType, bool> fix_pass;
  for (const auto& s : cs.pool) {
    if (fix_pass.count(s.type)) continue;
    bool pass = option_fits({s.type});  // identity
    if (!pass)
      for (const auto& option : fixed_options(s.type))
        if (option_fits(option)) { pass = true; break; }
    fix_pass[s.type] = pass;
  }
  auto stage2_pass = [&](const SemisimpleAlgebra& cand) {
    std::map<LeveledSimple, long> mult;
    for (const auto& s : cand.ideals) ++mult[s];
    for (const auto& s : cand.ideals) {
      if (fix_pass.at(s.type)) continue;
      // a swapped equal pair fixes a diagonal copy of the same type, so the
      // type itself must occur in g for that option to land inside it
      if (mult[s] >= 2 && option_fits({s.type})) continue;
      return false;
    }
    return true;
  };
  {
    auto flags = parallel_flags(cs.stage1, opts.workers, stage2_pass);
    for (size_t i = 0; i < cs.stage1.size(); ++i)
      if (flags[i]) cs.stage2.push_back(cs.stage1[i]);
  }

  // stage 3: a full assignment reproducing g's type multiset must exist
  auto stage3_pass = [&](const SemisimpleAlgebra& cand) {
    return !involution_assignments(cand, g).empty();
  };
  {
    auto flags = parallel_flags(cs.stage2, opts.workers, stage3_pass);
    for (size_t i = 0; i < cs.stage2.size(); ++i)
      if (flags[i]) cs.stage3.push_back(cs.stage2[i]);
  }
  return cs;
}

DiophantineInstance dioph_check(long target, long base, std::vector<long> coefficients) {
  for (long c : coefficients)
    if (c <= 0) throw std::invalid_argument("coefficients must be positive");
  DiophantineInstance inst;
  inst.target = target;
  inst.base = base;
  inst.coefficients = std::move(coefficients);
  const long rest = target - base;
  if (rest < 0) return inst;
  std::vector<long> x(inst.coefficients.size(), 0);
  std::function<void(size_t, long)> rec = [&](size_t i, long remaining) {
    if (i == x.size()) {
      if (remaining == 0) inst.solutions.push_back(x);
      return;
    }
    for (long v = 0; v * inst.coefficients[i] <= remaining; ++v) {
      x[i] = v;
      rec(i + 1, remaining - v * inst.coefficients[i]);
    }
    x[i] = 0;
  };
  rec(0, rest);
  return inst;
}

AffineDioph vacuum_module_dioph(const LeveledSimple& s, long target_dim2) {
  AffineDioph out;
  out.module = s;
  std::vector<long> coeffs;
  for (const Weight& lam : dominant_weights(s)) {
    bool zero = true;
    for (Eigen::Index i = 0; i < lam.size(); ++i)
      if (lam[i] != 0) zero = false;
    if (zero) continue;  // the vacuum contributes the base term
    const Rational cw = conformal_weight(s, lam);
    if (!is_integer(cw)) {
      out.fractional_classes.push_back(lam);
    } else if (cw == 1) {
      out.level1_classes.push_back(lam);  // excluded: weight one is exact
    } else if (cw == 2) {
      out.level2_classes.push_back(lam);
      coeffs.push_back(weyl_dim(s.type, lam));
    } else {
      out.higher_integral.push_back(lam);
    }
  }
  out.instance = dioph_check(target_dim2, vacuum_degree2_dim(s), coeffs);
  return out;
}

VerificationReport verify_case(const CaseRow& row, const VerifyOptions& opts) {
  VerificationReport rep;
  rep.case_id = row.id;
  rep.g = row.g;
  rep.f = row.f;
  rep.h = row.h;
  rep.annotations = row.notes;
  rep.annotations.push_back(
      "assumes all lifts of the (-1)-isometry are conjugate in the lattice "
      "VOA automorphism group");
  if (row.regression) rep.annotations.push_back("regression: prior work");

  auto add = [&](const std::string& name, bool pass, json values) {
    rep.checks.push_back(CheckResult{name, pass ? "pass" : "fail", std::move(values)});
  };

  HConditionOptions hopts;
  hopts.bound = opts.bound;
  hopts.full_oracle = opts.oracle;
  rep.h_report = check_h_conditions(row.g, row.h, hopts);
  const HConditionReport& hr = rep.h_report;

  add("twist_string_bound", hr.string_condition_ok,
      {{"condition", "(h_i|theta0) <= 1 on twisted ideals"}});
  add("norm", hr.norm_value == 2, {{"norm", to_string(hr.norm_value)}});
  add("deficit_zero", hr.d_zero == 1, {{"d0", to_string(hr.d_zero)}});
  add("min_deficit", hr.min_deficit > rat(-3, 2),
      {{"min", to_string(hr.min_deficit)},
       {"threshold", "-3/2"},
       {"tuples_scanned", hr.tuples_scanned}});
  add("half_integral_pairings", hr.all_pairings_half_integral,
      {{"all_in_half_integers", hr.all_pairings_half_integral}});
  {
    json values;
    values["count"] = static_cast<long>(hr.witnesses.size());
    json sample = json::array();
    for (size_t i = 0; i < hr.witnesses.size() && i < 4; ++i) {
      const auto& w = hr.witnesses[i];
      sample.push_back({{"ideal", w.ideal},
                        {"lambda", print_weight(w.lambda)},
                        {"pairing", to_string(w.value)}});
    }
    values["sample"] = sample;
    add("order2_witness", hr.order2_witness_present, values);
  }
  add("twisted_halfspace", hr.twisted_halfspace_vanishes,
      {{"conclusion", "no twisted vectors of weight 1/2"}});
  if (opts.oracle) {
    if (hr.oracle_ran)
      add("deficit_oracle", hr.oracle_agrees,
          {{"mode", "full tuple enumeration"}});
    else
      rep.checks.push_back(CheckResult{"deficit_oracle", "skipped",
                                       {{"reason", hr.guard_note}}});
  }

  const long mont = montague_dim(row.g);
  add("montague", row.f.dim() == mont,
      {{"dim_g", row.g.dim()}, {"dim_f", row.f.dim()}, {"expected_dim_f", mont}});

  SearchOptions sopts;
  sopts.bound = opts.bound;
  sopts.workers = opts.workers;
  rep.stages = candidate_search(row.g, sopts);
  const bool classified = rep.stages.stage3.size() == 1 &&
                          rep.stages.stage3[0].same_algebra(row.f);
  add("classification", classified,
      {{"survivors", algebra_list_json(rep.stages.stage3)},
       {"expected", canonical_string(row.f)}});

  const NiemeierEntry* entry = niemeier_lookup(row.f);
  add("niemeier", entry != nullptr,
      {{"entry", entry ? entry->name : "not found"}});

  rep.uniqueness = uniqueness_check(row.f, row.g);
  add("uniqueness",
      rep.uniqueness.status == UniquenessStatus::UniqueConjugateToTheta,
      {{"status", rep.uniqueness.status == UniquenessStatus::UniqueConjugateToTheta
                      ? "unique, conjugate to the (-1)-lift"
                      : rep.uniqueness.note}});

  if (row.order2_case == Order2Case::Dioph2) {
    const AffineDioph ad = vacuum_module_dioph(row.g.ideals[0], constants().dim_v2);
    json values;
    values["base"] = ad.instance.base;
    values["target"] = ad.instance.target;
    values["coefficients"] = ad.instance.coefficients;
    json classes = json::array();
    for (const auto& w : ad.level2_classes) classes.push_back(print_weight(w));
    values["weight2_classes"] = classes;
    json excluded = json::array();
    for (const auto& w : ad.level1_classes) excluded.push_back(print_weight(w));
    values["weight1_classes_excluded"] = excluded;
    json sols = json::array();
    for (const auto& s : ad.instance.solutions) sols.push_back(s);
    values["solutions"] = sols;
    add("diophantine", ad.instance.solutions.size() == 1, values);
  } else {
    rep.checks.push_back(CheckResult{
        "diophantine", "skipped",
        {{"reason", "character counting applies to the single-ideal row only"}}});
  }

  rep.verdict = true;
  for (const auto& c : rep.checks)
    if (c.status == "fail") rep.verdict = false;
  return rep;
}

json report_json(const VerificationReport& rep) {
  json out;
  out["case"] = rep.case_id;
  out["g"] = print_algebra(rep.g);
  out["f"] = print_algebra(rep.f);
  json h = json::array();
  for (const auto& part : rep.h.parts) h.push_back(weight_json(part));
  out["h"] = h;
  out["checks"] = json::array();
  for (const auto& c : rep.checks)
    out["checks"].push_back({{"name", c.name}, {"status", c.status}, {"values", c.values}});
  out["stages"] = json::array();
  {
    json pool = json::array();
    for (const auto& s : rep.stages.pool)
      pool.push_back(type_name(s.type) + "," + std::to_string(s.level));
    out["stages"].push_back({{"name", "pool"}, {"ideals", pool}});
  }
  out["stages"].push_back(
      {{"name", "stage1"}, {"survivors", algebra_list_json(rep.stages.stage1)}});
  out["stages"].push_back(
      {{"name", "stage2"}, {"survivors", algebra_list_json(rep.stages.stage2)}});
  out["stages"].push_back(
      {{"name", "stage3"}, {"survivors", algebra_list_json(rep.stages.stage3)}});
  out["verdict"] = rep.verdict ? "pass" : "fail";
  out["annotations"] = rep.annotations;
  return out;
}

std::string report_text(const VerificationReport& rep) {
  std::ostringstream os;
  os << "case " << rep.case_id << ": g = " << print_algebra(rep.g)
     << "   f = " << print_algebra(rep.f) << "\n";
  os << "  h = " << print_twist(rep.h) << "\n";
  for (const auto& c : rep.checks) {
    os << "  [" << (c.status == "pass" ? "pass" : c.status == "fail" ? "FAIL" : "skip")
       << "] " << c.name;
    if (c.name == "norm") os << " = " << to_string(rep.h_report.norm_value);
    if (c.name == "deficit_zero") os << " = " << to_string(rep.h_report.d_zero);
    if (c.name == "min_deficit")
      os << " = " << to_string(rep.h_report.min_deficit) << " > -3/2";
    if (c.name == "classification" && !rep.stages.stage3.empty()) {
      os << " -> ";
      for (size_t i = 0; i < rep.stages.stage3.size(); ++i) {
        if (i) os << " ; ";
        os << canonical_string(rep.stages.stage3[i]);
      }
    }
    os << "\n";
  }
  os << "  verdict: " << (rep.verdict ? "PASS" : "FAIL") << "\n";
  return os.str();
}

json search_json(const SemisimpleAlgebra& g, const CandidateSet& cs) {
  json out;
  out["g"] = print_algebra(g);
  out["target_dim"] = cs.target_dim;
  out["ratio"] = to_string(cs.ratio_value);
  json pool = json::array();
  for (const auto& s : cs.pool)
    pool.push_back(type_name(s.type) + "," + std::to_string(s.level));
  out["pool"] = pool;
  out["stages"] = json::array();
  out["stages"].push_back({{"name", "stage1"}, {"survivors", algebra_list_json(cs.stage1)}});
  out["stages"].push_back({{"name", "stage2"}, {"survivors", algebra_list_json(cs.stage2)}});
  out["stages"].push_back({{"name", "stage3"}, {"survivors", algebra_list_json(cs.stage3)}});
  return out;
}

std::string search_text(const SemisimpleAlgebra& g, const CandidateSet& cs) {
  std::ostringstream os;
  os << "g = " << print_algebra(g) << "   dim W1 = " << cs.target_dim
     << "   h_dual/level = " << to_string(cs.ratio_value) << "\n";
  os << "pool:";
  for (const auto& s : cs.pool)
    os << " " << type_name(s.type) << "," << s.level;
  os << "\n";
  auto stage = [&](const char* name, const std::vector<SemisimpleAlgebra>& list) {
    os << name << " (" << list.size() << "):\n";
    for (const auto& c : list) os << "  " << canonical_string(c) << "\n";
  };
  stage("stage1: dimension", cs.stage1);
  stage("stage2: involution-compatible", cs.stage2);
  stage("stage3: assignment exists", cs.stage3);
  return os.str();
}

}  // namespace voa24
