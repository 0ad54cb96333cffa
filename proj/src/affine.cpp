#include "voa24/affine.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace voa24 {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

void require_aligned(const SemisimpleAlgebra& g, const TwistElement& h) {
  if (h.parts.size() != g.ideals.size())
    fail("twist element not aligned with algebra");
  for (size_t i = 0; i < g.ideals.size(); ++i)
    if (h.parts[i].size() != g.ideals[i].type.rank)
      fail("twist element part has wrong rank");
}

void require_admissible(const LeveledSimple& s, const Weight& lambda) {
  if (!is_dominant_integral(s.type, lambda))
    fail("weight not dominant integral for " + type_name(s.type));
  if (highest_root_pairing(s.type, lambda) > s.level)
    fail("weight not admissible at level " + std::to_string(s.level));
}

bool is_zero(const Weight& w) {
  for (Eigen::Index i = 0; i < w.size(); ++i)
    if (w[i] != 0) return false;
  return true;
}

}  // namespace

std::vector<LeveledSimple> canonicalize_leveled(Family f, int rank, long level) {
  if (level < 1) fail("level must be positive");
  if (f == Family::B && rank == 1)
    return {LeveledSimple{SimpleType{Family::A, 1}, 2 * level}};
  std::vector<LeveledSimple> out;
  for (SimpleType t : canonical_components(f, rank))
    out.push_back(LeveledSimple{t, level});
  return out;
}

long SemisimpleAlgebra::dim() const {
  long d = 0;
  for (const auto& s : ideals) d += dim_simple(s.type);
  return d;
}

int SemisimpleAlgebra::rank() const {
  int r = 0;
  for (const auto& s : ideals) r += s.type.rank;
  return r;
}

std::vector<LeveledSimple> SemisimpleAlgebra::canonical_key() const {
  std::vector<LeveledSimple> key = ideals;
  std::sort(key.begin(), key.end());
  return key;
}

bool SemisimpleAlgebra::same_algebra(const SemisimpleAlgebra& other) const {
  return canonical_key() == other.canonical_key();
}

std::vector<Weight> dominant_weights(const LeveledSimple& s, long bound) {
  const SimpleType t = s.type;
  const int n = t.rank;
  std::vector<long> comarks(n);
  for (int i = 0; i < n; ++i)
    comarks[i] = highest_root_pairing(t, fundamental_weight(t, i + 1));

  std::vector<std::pair<long, std::vector<long>>> found;  // (level, coords)
  std::vector<long> coords(n, 0);
  std::function<void(int, long)> rec = [&](int node, long budget) {
    if (node == n) {
      long lvl = 0;
      for (int i = 0; i < n; ++i) lvl += coords[i] * comarks[i];
      found.emplace_back(lvl, coords);
      if (static_cast<long>(found.size()) > bound)
        throw ResourceGuard("dominant weight count for " + type_name(t) +
                            " exceeds bound " + std::to_string(bound));
      return;
    }
    for (long c = 0; c * comarks[node] <= budget; ++c) {
      coords[node] = c;
      rec(node + 1, budget - c * comarks[node]);
    }
    coords[node] = 0;
  };
  rec(0, s.level);

  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) {
              if (a.first != b.first) return a.first < b.first;
              return a.second > b.second;  // reverse-lex within a level
            });
  std::vector<Weight> out;
  out.reserve(found.size());
  for (const auto& [lvl, c] : found) out.push_back(to_vec(c));
  return out;
}

Rational conformal_weight(const LeveledSimple& s, const Weight& lambda) {
  require_admissible(s, lambda);
  const Rational num = inner(s.type, lambda, lambda + 2 * rho(s.type));
  return num / rat(2 * (s.level + dual_coxeter(s.type)));
}

Rational conformal_weight(const SemisimpleAlgebra& g, const SemisimpleWeight& lambda) {
  if (lambda.size() != g.ideals.size()) fail("weight tuple not aligned");
  Rational sum = rat(0);
  for (size_t i = 0; i < g.ideals.size(); ++i)
    sum += conformal_weight(g.ideals[i], lambda[i]);
  return sum;
}

Rational norm(const SemisimpleAlgebra& g, const TwistElement& h) {
  require_aligned(g, h);
  Rational sum = rat(0);
  for (size_t i = 0; i < g.ideals.size(); ++i)
    sum += rat(g.ideals[i].level) * inner(g.ideals[i].type, h.parts[i], h.parts[i]);
  return sum;
}

Rational twisted_weight(const SemisimpleAlgebra& g, const TwistElement& h,
                        const SemisimpleWeight& lambda) {
  return conformal_weight(g, lambda) + deficit(g, h, lambda);
}

Rational deficit(const SemisimpleAlgebra& g, const TwistElement& h,
                 const SemisimpleWeight& lambda) {
  require_aligned(g, h);
  if (lambda.size() != g.ideals.size()) fail("weight tuple not aligned");
  Rational sum = norm(g, h) / 2;
  for (size_t i = 0; i < g.ideals.size(); ++i) {
    require_admissible(g.ideals[i], lambda[i]);
    sum += min_pairing(g.ideals[i].type, h.parts[i], lambda[i]);
  }
  return sum;
}

HConditionReport check_h_conditions(const SemisimpleAlgebra& g, const TwistElement& h,
                                    const HConditionOptions& opts) {
  require_aligned(g, h);
  HConditionReport rep;
  rep.norm_value = norm(g, h);
  rep.d_zero = rep.norm_value / 2;

  const size_t t = g.ideals.size();
  for (size_t i = 0; i < t; ++i)
    if (!is_zero(h.parts[i])) rep.twist_ideals.push_back(static_cast<int>(i));

  // validity of the twisted-weight formula: (h|alpha) >= -1 for all roots,
  // i.e. (h_i|theta0) <= 1 on each twisted ideal
  for (int i : rep.twist_ideals) {
    const SimpleType ty = g.ideals[i].type;
    if (inner(ty, h.parts[i], highest_root(ty)) > 1) rep.string_condition_ok = false;
  }

  // admissible weights per ideal
  std::vector<std::vector<Weight>> admissible(t);
  for (size_t i = 0; i < t; ++i) admissible[i] = dominant_weights(g.ideals[i], opts.bound);

  // half-integrality of (h|lambda) over single-ideal weights
  for (size_t i = 0; i < t; ++i) {
    const SimpleType ty = g.ideals[i].type;
    for (const Weight& lam : admissible[i]) {
      const Rational v = inner(ty, h.parts[i], lam);
      const Rational twice = 2 * v;
      if (!is_integer(twice)) rep.all_pairings_half_integral = false;
      else if (to_long(twice) % 2 != 0)
        rep.witnesses.push_back(HalfIntegerWitness{static_cast<int>(i), lam, v});
    }
  }
  rep.order2_witness_present = !rep.witnesses.empty();

  // minimum deficit; only twisted components move it, the rest stay at 0
  SemisimpleWeight tuple(t);
  for (size_t i = 0; i < t; ++i) tuple[i] = zero_weight(g.ideals[i].type);
  rep.min_deficit = rep.d_zero;
  rep.min_deficit_arg = tuple;

  const auto& twists = rep.twist_ideals;
  long product = 1;
  for (int i : twists) {
    product *= static_cast<long>(admissible[i].size());
    if (product > opts.bound)
      throw ResourceGuard("twist enumeration exceeds bound");
  }
  std::vector<size_t> odo(twists.size(), 0);
  bool done = twists.empty();
  while (!done) {
    for (size_t k = 0; k < twists.size(); ++k) tuple[twists[k]] = admissible[twists[k]][odo[k]];
    const Rational d = deficit(g, h, tuple);
    ++rep.tuples_scanned;
    if (d < rep.min_deficit) {
      rep.min_deficit = d;
      rep.min_deficit_arg = tuple;
    }
    size_t k = 0;
    while (k < odo.size()) {
      if (++odo[k] < admissible[twists[k]].size()) break;
      odo[k] = 0;
      ++k;
    }
    done = (k == odo.size());
  }

  rep.twisted_halfspace_vanishes =
      rep.d_zero > rat(1, 2) && rep.min_deficit > rat(-3, 2);

  if (opts.full_oracle) {
    long full = 1;
    bool feasible = true;
    for (size_t i = 0; i < t; ++i) {
      full *= static_cast<long>(admissible[i].size());
      if (full > opts.bound) { feasible = false; break; }
    }
    if (!feasible) {
      rep.guard_note = "full tuple enumeration exceeds bound; oracle skipped";
    } else {
      Rational best = rep.d_zero;
      SemisimpleWeight full_tuple(t);
      std::vector<size_t> o(t, 0);
      bool fin = false;
      while (!fin) {
        for (size_t i = 0; i < t; ++i) full_tuple[i] = admissible[i][o[i]];
        const Rational d = deficit(g, h, full_tuple);
        if (d < best) best = d;
        size_t k = 0;
        while (k < t) {
          if (++o[k] < admissible[k].size()) break;
          o[k] = 0;
          ++k;
        }
        fin = (k == t);
      }
      rep.oracle_ran = true;
      rep.oracle_agrees = (best == rep.min_deficit);
    }
  }
  return rep;
}

long vacuum_degree2_dim(const LeveledSimple& s) {
  if (s.level < 2)
    fail("degree-2 vacuum dimension needs level >= 2");
  const long d = dim_simple(s.type);
  return d + d * (d + 1) / 2;
}

}  // namespace voa24
