#include "kisin/connectivity.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace kisin {

namespace {

bool dominated(const Cochar &v, const Cochar &mu) {
  return dominance_leq(dominant(v).value, mu);
}

class UnionFind {
public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x)
      x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b)
      parent_[std::max(a, b)] = std::min(a, b);
  }

private:
  std::vector<int> parent_;
};

} // namespace

bool edge_exists(const FrobeniusDatum &datum, const Cochar &mu, const Cochar &lam,
                 const Root &alpha) {
  if (!stratum_nonempty(datum, mu, lam))
    throw PreconditionError("lambda is not in S");
  const Cochar a = coroot(datum.shape, alpha);
  const Cochar twisted = act_weyl(datum.w(), act_sigma(datum.shape, a));
  const Cochar nat = natural_lambda(datum, lam);
  return dominated(nat + a, mu) && dominated(nat - twisted, mu) &&
         dominated(nat + a - twisted, mu);
}

StrataGraph build_graph(const FrobeniusDatum &datum, const Cochar &mu) {
  StrataGraph g;
  g.vertices = enumerate_strata(datum, mu);
  std::map<Cochar, int> index;
  for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v)
    index.emplace(g.vertices[v].lam, v);

  const auto roots = all_roots(datum.shape);
  std::set<std::pair<int, int>> seen;
  UnionFind uf(static_cast<int>(g.vertices.size()));
  for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) {
    for (const auto &alpha : roots) {
      auto it = index.find(g.vertices[v].lam - coroot(datum.shape, alpha));
      if (it == index.end())
        continue;
      auto key = std::minmax(v, it->second);
      if (seen.count(key) || !edge_exists(datum, mu, g.vertices[v].lam, alpha))
        continue;
      seen.insert(key);
      g.edges.push_back({v, it->second, alpha});
      uf.unite(v, it->second);
    }
  }
  std::map<int, std::vector<int>> groups;
  for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v)
    groups[uf.find(v)].push_back(v);
  for (auto &[root, members] : groups)
    g.components.push_back(std::move(members));
  return g;
}

Pi0Report pi0_report(const StrataGraph &graph) {
  Pi0Report r;
  r.value = static_cast<int>(graph.components.size());
  if (graph.vertices.empty()) {
    r.status = Pi0Status::empty;
    return r;
  }
  bool all_points = std::all_of(graph.vertices.begin(), graph.vertices.end(), [](const Stratum &s) {
    return s.singleton.verdict == Singleton::proven;
  });
  r.status = all_points ? Pi0Status::exact : Pi0Status::upper_bound;
  return r;
}

namespace {

void require_gl3(const FrobeniusDatum &datum) {
  if (datum.shape.n() != 3 || datum.shape.blocks() != 1)
    throw PreconditionError("chain construction needs GL_3 with a single block");
  if (order(datum.w()[0]) != 3)
    throw PreconditionError("chain construction needs w of order 3");
}

Cochar weyl_block0(const FrobeniusDatum &datum, const Cochar &v) { return act_weyl(datum.w(), v); }

Root root_of(const GroupShape &shape, const Cochar &step) {
  for (const auto &alpha : all_roots(shape))
    if (coroot(shape, alpha) == step)
      return alpha;
  throw TheoremViolation("chain step is not a coroot");
}

// Solve delta = n1 a + n2 b on the first two coordinates and confirm the
// third; a and b are independent coroots of GL_3.
std::optional<std::pair<Integer, Integer>> solve2(const Cochar &delta, const Cochar &a,
                                                  const Cochar &b) {
  for (int r0 = 0; r0 < 3; ++r0)
    for (int r1 = r0 + 1; r1 < 3; ++r1) {
      Integer det = a(0, r0) * b(0, r1) - a(0, r1) * b(0, r0);
      if (det == 0)
        continue;
      Integer x = delta(0, r0) * b(0, r1) - delta(0, r1) * b(0, r0);
      Integer y = a(0, r0) * delta(0, r1) - a(0, r1) * delta(0, r0);
      if (x % det != 0 || y % det != 0)
        return std::nullopt;
      Integer n1 = x / det, n2 = y / det;
      Cochar check = a;
      for (int i = 0; i < 3; ++i)
        check(0, i) = n1 * a(0, i) + n2 * b(0, i);
      if (check != delta)
        return std::nullopt;
      return std::make_pair(n1, n2);
    }
  return std::nullopt;
}

} // namespace

Gl3Decomposition normalize_gl3(const FrobeniusDatum &datum, const Cochar &delta) {
  require_gl3(datum);
  for (const auto &alpha : all_roots(datum.shape)) {
    Cochar a = coroot(datum.shape, alpha);
    auto sol = solve2(delta, a, weyl_block0(datum, a));
    if (!sol)
      continue;
    const auto &[n1, n2] = *sol;
    Integer m = std::max({abs(n1), abs(n2), abs(Integer(n1 - n2))});
    if (n1 == m)
      return {alpha, n1, n2};
  }
  throw TheoremViolation("difference " + to_string(delta) + " has no normalized decomposition");
}

std::vector<ChainStep> chain_gl3(const FrobeniusDatum &datum, const Cochar &mu, const Cochar &lam,
                                 const Cochar &lam_prime) {
  require_gl3(datum);
  if (!stratum_nonempty(datum, mu, lam) || !stratum_nonempty(datum, mu, lam_prime))
    throw PreconditionError("chain endpoints must lie in S");
  if (sum_profile(lam) != sum_profile(lam_prime))
    throw TheoremViolation("endpoints differ by a vector outside the coroot lattice");

  const GroupShape &shape = datum.shape;
  std::vector<ChainStep> chain{{lam, std::nullopt}};
  Cochar cur = lam;
  auto advance = [&](const Cochar &step) {
    cur += step;
    if (!stratum_nonempty(datum, mu, cur))
      throw TheoremViolation("chain left S at " + to_string(cur));
    chain.push_back({cur, root_of(shape, step)});
  };

  std::optional<Integer> last_n1;
  while (cur != lam_prime) {
    Gl3Decomposition dec = normalize_gl3(datum, lam_prime - cur);
    if (last_n1 && dec.n1 >= *last_n1)
      throw TheoremViolation("normalized n1 failed to decrease");
    last_n1 = dec.n1;
    const Cochar a1 = coroot(shape, dec.alpha);
    const Cochar a2 = weyl_block0(datum, a1);
    const Cochar a3 = weyl_block0(datum, a2);
    if (dec.n2 == 0 || dec.n2 == dec.n1) {
      const Cochar step = dec.n2 == 0 ? a1 : -a3;
      for (Integer t = 0; t < dec.n1; ++t)
        advance(step);
      break;
    }
    if (stratum_nonempty(datum, mu, cur + a1))
      advance(a1);
    else if (stratum_nonempty(datum, mu, cur - a3))
      advance(-a3);
    else
      throw TheoremViolation("neither lambda + alpha_1 nor lambda - alpha_3 lies in S at " +
                             to_string(cur));
  }
  if (cur != lam_prime)
    throw TheoremViolation("chain did not reach its endpoint");
  return chain;
}

} // namespace kisin
