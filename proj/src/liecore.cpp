#include "voa24/liecore.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace voa24 {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

struct RootData {
  Eigen::MatrixXi cartan;
  std::vector<Rational> half_norms;  // d_j = (a_j|a_j)/2
  Mat gram;
  std::vector<IVec> pos_roots;
  std::vector<Vec> gram_alpha;       // G * alpha, one per positive root
  std::vector<Rational> rho_pairing;  // (rho|alpha), one per positive root
  Vec theta;                          // highest root, pi-coordinates
  std::vector<int> tau;               // -w0 as a node permutation
  int dual_cox = 0;
  long dim = 0;
};

Eigen::MatrixXi build_cartan(SimpleType t) {
  const int n = t.rank;
  Eigen::MatrixXi a = 2 * Eigen::MatrixXi::Identity(n, n);
  auto link = [&](int i, int j) { a(i, j) = -1; a(j, i) = -1; };
  switch (t.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Family::B:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a(n - 2, n - 1) = -2;  // last simple root is short
      break;
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a(n - 1, n - 2) = -2;  // last simple root is long
      break;
    case Family::D:
      for (int i = 0; i + 1 < n - 1; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case Family::E:
      // Bourbaki: chain 1-3-4-5-6(-7)(-8), node 2 attached to node 4.
      link(0, 2);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      link(1, 3);
      break;
    case Family::F:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a(1, 2) = -2;  // nodes 3,4 short
      break;
    case Family::G:
      a(0, 1) = -1;  // node 1 short
      a(1, 0) = -3;
      break;
  }
  return a;
}

std::vector<Rational> build_half_norms(SimpleType t) {
  const int n = t.rank;
  std::vector<Rational> d(n, rat(1));
  switch (t.family) {
    case Family::B: d[n - 1] = rat(1, 2); break;
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) d[i] = rat(1, 2);
      break;
    case Family::F: d[2] = rat(1, 2); d[3] = rat(1, 2); break;
    case Family::G: d[0] = rat(1, 3); break;
    default: break;
  }
  return d;
}

std::vector<int> build_tau(SimpleType t) {
  const int n = t.rank;
  std::vector<int> tau(n);
  for (int i = 0; i < n; ++i) tau[i] = i;
  if (t.family == Family::A) {
    for (int i = 0; i < n; ++i) tau[i] = n - 1 - i;
  } else if (t.family == Family::D && n % 2 == 1) {
    std::swap(tau[n - 2], tau[n - 1]);
  } else if (t.family == Family::E && n == 6) {
    std::swap(tau[0], tau[5]);
    std::swap(tau[2], tau[4]);
  }
  return tau;
}

std::vector<IVec> build_positive_roots(const Eigen::MatrixXi& a) {
  const int n = static_cast<int>(a.rows());
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> frontier;
  for (int j = 0; j < n; ++j) {
    std::vector<int> alpha(n);
    for (int i = 0; i < n; ++i) alpha[i] = a(j, i);
    frontier.push_back(alpha);
    seen.insert(alpha);
  }
  bool simple_level = true;
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (size_t b = 0; b < frontier.size(); ++b) {
      const std::vector<int>& beta = frontier[b];
      for (int i = 0; i < n; ++i) {
        if (simple_level && static_cast<int>(b) == i) continue;  // no 2*alpha_i
        // depth of the i-string below beta
        int p = 0;
        std::vector<int> mu = beta;
        while (true) {
          for (int k = 0; k < n; ++k) mu[k] -= a(i, k);
          if (!seen.count(mu)) break;
          ++p;
        }
        const int q = p - beta[i];
        if (q <= 0) continue;
        std::vector<int> nu = beta;
        for (int k = 0; k < n; ++k) nu[k] += a(i, k);
        if (seen.insert(nu).second) next.push_back(nu);
      }
    }
    frontier = std::move(next);
    simple_level = false;
  }
  std::vector<IVec> out;
  out.reserve(seen.size());
  for (const auto& r : seen) {
    IVec v(n);
    for (int i = 0; i < n; ++i) v[i] = r[i];
    out.push_back(v);
  }
  return out;
}

std::unique_ptr<RootData> build_root_data(SimpleType t) {
  auto rd = std::make_unique<RootData>();
  const int n = t.rank;
  rd->cartan = build_cartan(t);
  rd->half_norms = build_half_norms(t);
  rd->tau = build_tau(t);

  Mat aq(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) aq(i, j) = rat(rd->cartan(i, j));
  Mat ainv = aq.inverse();
  rd->gram.resize(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rd->gram(i, j) = ainv(i, j) * rd->half_norms[j];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      if (rd->gram(i, j) != rd->gram(j, i)) fail("gram matrix not symmetric");

  rd->pos_roots = build_positive_roots(rd->cartan);
  rd->dim = 2 * static_cast<long>(rd->pos_roots.size()) + n;

  Vec rho_vec = Vec::Constant(n, rat(1));
  rd->gram_alpha.reserve(rd->pos_roots.size());
  rd->rho_pairing.reserve(rd->pos_roots.size());
  for (const IVec& alpha : rd->pos_roots) {
    Vec av(n);
    for (int i = 0; i < n; ++i) av[i] = rat(alpha[i]);
    Vec ga = rd->gram * av;
    rd->rho_pairing.push_back(rho_vec.dot(ga));
    rd->gram_alpha.push_back(std::move(ga));
  }

  // highest root: the unique dominant root of squared length 2
  bool found = false;
  for (size_t r = 0; r < rd->pos_roots.size(); ++r) {
    const IVec& alpha = rd->pos_roots[r];
    bool dominant = true;
    for (int i = 0; i < n; ++i)
      if (alpha[i] < 0) dominant = false;
    if (!dominant) continue;
    Vec av(n);
    for (int i = 0; i < n; ++i) av[i] = rat(alpha[i]);
    if (av.dot(rd->gram_alpha[r]) != rat(2)) continue;
    if (found) fail("highest root not unique");
    rd->theta = av;
    found = true;
  }
  if (!found) fail("no long dominant root");

  Rational hv = rat(1) + rho_vec.dot(rd->gram * rd->theta);
  rd->dual_cox = static_cast<int>(to_long(hv));
  return rd;
}

const RootData& root_data(SimpleType t) {
  if (!is_canonical(t.family, t.rank))
    fail("type not canonical: " + type_name(t));
  static std::shared_mutex mu;
  static std::map<SimpleType, std::unique_ptr<RootData>> cache;
  {
    std::shared_lock lock(mu);
    auto it = cache.find(t);
    if (it != cache.end()) return *it->second;
  }
  auto built = build_root_data(t);
  std::unique_lock lock(mu);
  auto [it, inserted] = cache.emplace(t, std::move(built));
  return *it->second;
}

}  // namespace

char family_letter(Family f) {
  static const char letters[] = {'A', 'B', 'C', 'D', 'E', 'F', 'G'};
  return letters[static_cast<int>(f)];
}

std::optional<Family> family_from_letter(char c) {
  if (c >= 'A' && c <= 'G') return static_cast<Family>(c - 'A');
  return std::nullopt;
}

bool is_canonical(Family f, int rank) {
  switch (f) {
    case Family::A: return rank >= 1;
    case Family::B: return rank >= 2;
    case Family::C: return rank >= 3;
    case Family::D: return rank >= 4;
    case Family::E: return rank >= 6 && rank <= 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
  }
  return false;
}

std::vector<SimpleType> canonical_components(Family f, int rank) {
  if (rank < 1) fail("rank must be positive");
  switch (f) {
    case Family::B:
      if (rank == 1) return {SimpleType{Family::A, 1}};
      break;
    case Family::C:
      if (rank == 1) return {SimpleType{Family::A, 1}};
      if (rank == 2) return {SimpleType{Family::B, 2}};
      break;
    case Family::D:
      if (rank == 2) return {SimpleType{Family::A, 1}, SimpleType{Family::A, 1}};
      if (rank == 3) return {SimpleType{Family::A, 3}};
      break;
    default:
      break;
  }
  if (!is_canonical(f, rank))
    fail(std::string("invalid simple type ") + family_letter(f) + std::to_string(rank));
  return {SimpleType{f, rank}};
}

SimpleType canonicalize(Family f, int rank) {
  auto parts = canonical_components(f, rank);
  if (parts.size() != 1)
    fail("type splits into several components; use canonical_components");
  return parts[0];
}

bool simply_laced(SimpleType t) {
  return t.family == Family::A || t.family == Family::D || t.family == Family::E;
}

std::string type_name(SimpleType t) {
  return std::string(1, family_letter(t.family)) + std::to_string(t.rank);
}

const Eigen::MatrixXi& cartan_matrix(SimpleType t) { return root_data(t).cartan; }
const Mat& quadratic_form(SimpleType t) { return root_data(t).gram; }
const std::vector<IVec>& positive_roots(SimpleType t) { return root_data(t).pos_roots; }
const std::vector<int>& lowest_weight_involution(SimpleType t) { return root_data(t).tau; }

Rational inner(SimpleType t, const Weight& a, const Weight& b) {
  const RootData& rd = root_data(t);
  if (a.size() != t.rank || b.size() != t.rank)
    fail("weight dimension mismatch for " + type_name(t));
  return a.dot(rd.gram * b);
}

Weight highest_root(SimpleType t) { return root_data(t).theta; }

Weight rho(SimpleType t) { return Vec::Constant(t.rank, rat(1)); }

Weight fundamental_weight(SimpleType t, int node) {
  if (node < 1 || node > t.rank) fail("node out of range for " + type_name(t));
  Vec w = Vec::Constant(t.rank, rat(0));
  w[node - 1] = rat(1);
  return w;
}

Weight zero_weight(SimpleType t) { return Vec::Constant(t.rank, rat(0)); }

int dual_coxeter(SimpleType t) { return root_data(t).dual_cox; }
long dim_simple(SimpleType t) { return root_data(t).dim; }
long num_positive_roots(SimpleType t) {
  return static_cast<long>(root_data(t).pos_roots.size());
}

long highest_root_pairing(SimpleType t, const Weight& w) {
  return to_long(inner(t, w, root_data(t).theta));
}

bool is_dominant_integral(SimpleType t, const Weight& w) {
  if (w.size() != t.rank) return false;
  for (int i = 0; i < t.rank; ++i)
    if (!is_integer(w[i]) || w[i] < 0) return false;
  return true;
}

long weyl_dim(SimpleType t, const Weight& lambda) {
  if (!is_dominant_integral(t, lambda))
    fail("weyl_dim requires a dominant integral weight");
  const RootData& rd = root_data(t);
  Vec lr = lambda + rho(t);
  Rational prod = rat(1);
  for (size_t r = 0; r < rd.gram_alpha.size(); ++r)
    prod *= lr.dot(rd.gram_alpha[r]) / rd.rho_pairing[r];
  return to_long(prod);
}

std::vector<Weight> weight_support(SimpleType t, const Weight& lambda, long bound) {
  if (!is_dominant_integral(t, lambda))
    fail("weight_support requires a dominant integral weight");
  const RootData& rd = root_data(t);
  const int n = t.rank;
  std::set<std::vector<long>> seen;
  std::vector<std::vector<long>> queue;
  std::vector<long> start = to_longs(lambda);
  seen.insert(start);
  queue.push_back(start);
  for (size_t head = 0; head < queue.size(); ++head) {
    std::vector<long> mu = queue[head];
    for (int i = 0; i < n; ++i) {
      const long c = mu[i];
      if (c <= 0) continue;
      std::vector<long> nu = mu;
      for (long k = 1; k <= c; ++k) {
        for (int j = 0; j < n; ++j) nu[j] -= rd.cartan(i, j);
        if (seen.insert(nu).second) {
          if (static_cast<long>(seen.size()) > bound)
            throw ResourceGuard("weight support of " + type_name(t) +
                                " exceeds bound " + std::to_string(bound));
          queue.push_back(nu);
        }
      }
    }
  }
  std::vector<Weight> out;
  out.reserve(seen.size());
  for (const auto& v : seen) out.push_back(to_vec(v));
  return out;
}

Weight apply_node_permutation(const std::vector<int>& perm, const Weight& w) {
  Vec out(w.size());
  for (size_t i = 0; i < perm.size(); ++i)
    out[static_cast<Eigen::Index>(perm[i])] = w[static_cast<Eigen::Index>(i)];
  return out;
}

Rational min_pairing(SimpleType t, const Weight& h, const Weight& lambda) {
  // lowest weight of L(lambda) is w0(lambda) = -tau(lambda)
  const Weight tl = apply_node_permutation(lowest_weight_involution(t), lambda);
  return -inner(t, h, tl);
}

}  // namespace voa24
