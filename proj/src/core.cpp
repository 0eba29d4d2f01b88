#include "kisin/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace kisin {

GroupShape::GroupShape(int n, std::vector<int> eps, int p) : n_(n), eps_(std::move(eps)), p_(p) {
  if (n_ < 1)
    throw InvalidInput("GL_n rank must be positive");
  if (eps_.empty())
    throw InvalidInput("group shape needs at least one block");
  if (!is_prime(p_))
    throw InvalidInput("p = " + std::to_string(p_) + " is not prime");
  for (int e : eps_)
    if (e != 1 && e != p_)
      throw InvalidInput("Frobenius scales must be 1 or p");
}

GroupShape GroupShape::restriction(int n, int f, int p) {
  if (f < 1)
    throw InvalidInput("residue degree f must be positive");
  return GroupShape(n, std::vector<int>(f, p), p);
}

GroupShape GroupShape::multi_copy(int n, int f, int d, int p) {
  if (f < 1 || d < 1)
    throw InvalidInput("f and d must be positive");
  std::vector<int> eps(std::size_t(d) * f, 1);
  for (int k = 0; k < d * f; ++k)
    if ((k + 1) % d == 0)
      eps[k] = p;
  return GroupShape(n, std::move(eps), p);
}

int GroupShape::frobenius_weight() const {
  return static_cast<int>(std::count(eps_.begin(), eps_.end(), p_));
}

RatCochar to_rational(const Cochar &v) {
  std::vector<Rational> data(v.flat().begin(), v.flat().end());
  return RatCochar(v.blocks(), v.n(), std::move(data));
}

Cochar zero_cochar(const GroupShape &shape) { return Cochar(shape.blocks(), shape.n()); }

bool fits(const GroupShape &shape, const Cochar &v) {
  return v.blocks() == shape.blocks() && v.n() == shape.n();
}
bool fits(const GroupShape &shape, const RatCochar &v) {
  return v.blocks() == shape.blocks() && v.n() == shape.n();
}

// --- permutations -----------------------------------------------------------

Permutation identity_permutation(int n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

bool is_permutation(const Permutation &perm) {
  std::vector<bool> seen(perm.size(), false);
  for (int x : perm) {
    if (x < 0 || x >= static_cast<int>(perm.size()) || seen[x])
      return false;
    seen[x] = true;
  }
  return true;
}

Permutation inverse(const Permutation &perm) {
  Permutation inv(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i)
    inv[perm[i]] = static_cast<int>(i);
  return inv;
}

Permutation compose(const Permutation &a, const Permutation &b) {
  if (a.size() != b.size())
    throw InvalidInput("composing permutations of different degree");
  Permutation out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = a[b[i]];
  return out;
}

Permutation from_cycles(int n, const std::vector<std::vector<int>> &cycles) {
  Permutation p = identity_permutation(n);
  std::vector<bool> used(n, false);
  for (const auto &cycle : cycles) {
    for (std::size_t t = 0; t < cycle.size(); ++t) {
      int from = cycle[t] - 1;
      int to = cycle[(t + 1) % cycle.size()] - 1;
      if (from < 0 || from >= n || to < 0 || to >= n || used[from])
        throw InvalidInput("malformed cycle notation");
      used[from] = true;
      p[from] = to;
    }
  }
  return p;
}

int order(const Permutation &perm) {
  int result = 1;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i])
      continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

// --- Weyl group -------------------------------------------------------------

WeylElt::WeylElt(std::vector<Permutation> perms) : perms_(std::move(perms)) {
  if (perms_.empty())
    throw InvalidInput("Weyl element needs at least one block");
  for (const auto &p : perms_)
    if (p.size() != perms_.front().size() || !is_permutation(p))
      throw InvalidInput("Weyl element blocks must be permutations of equal degree");
}

WeylElt WeylElt::identity(int blocks, int n) {
  return WeylElt(std::vector<Permutation>(blocks, identity_permutation(n)));
}

bool WeylElt::is_identity() const {
  return std::all_of(perms_.begin(), perms_.end(),
                     [](const Permutation &p) { return p == identity_permutation(int(p.size())); });
}

WeylElt operator*(const WeylElt &a, const WeylElt &b) {
  if (a.blocks() != b.blocks() || a.n() != b.n())
    throw InvalidInput("shape mismatch in Weyl product");
  std::vector<Permutation> out;
  for (int k = 0; k < a.blocks(); ++k)
    out.push_back(compose(a[k], b[k]));
  return WeylElt(std::move(out));
}

WeylElt inverse(const WeylElt &w) {
  std::vector<Permutation> out;
  for (const auto &p : w.perms())
    out.push_back(inverse(p));
  return WeylElt(std::move(out));
}

WeylElt sigma0(const WeylElt &w) {
  const int N = w.blocks();
  std::vector<Permutation> out;
  for (int k = 0; k < N; ++k)
    out.push_back(w[(k + 1) % N]);
  return WeylElt(std::move(out));
}

// --- dominance --------------------------------------------------------------

DominantForm dominant(const Cochar &v) {
  DominantForm out{Cochar(v.blocks(), v.n()), WeylElt::identity(v.blocks(), v.n())};
  std::vector<Permutation> witness;
  for (int k = 0; k < v.blocks(); ++k) {
    auto blk = v.block(k);
    Permutation order_idx = identity_permutation(v.n());
    std::stable_sort(order_idx.begin(), order_idx.end(),
                     [&](int a, int b) { return blk[a] > blk[b]; });
    // order_idx[r] is the source of rank r; the witness sends source to rank.
    Permutation y(v.n());
    for (int r = 0; r < v.n(); ++r) {
      y[order_idx[r]] = r;
      out.value(k, r) = blk[order_idx[r]];
    }
    witness.push_back(std::move(y));
  }
  out.witness = WeylElt(std::move(witness));
  return out;
}

bool is_dominant(const Cochar &v) {
  for (int k = 0; k < v.blocks(); ++k)
    for (int i = 0; i + 1 < v.n(); ++i)
      if (v(k, i) < v(k, i + 1))
        return false;
  return true;
}

bool is_minuscule(const Cochar &v) {
  for (int k = 0; k < v.blocks(); ++k) {
    auto [lo, hi] = std::minmax_element(v.block(k).begin(), v.block(k).end());
    if (*hi - *lo > 1)
      return false;
  }
  return true;
}

bool is_central(const Cochar &v) {
  for (int k = 0; k < v.blocks(); ++k)
    for (int i = 1; i < v.n(); ++i)
      if (v(k, i) != v(k, 0))
        return false;
  return true;
}

bool dominance_leq(const Cochar &nu, const Cochar &mu) {
  if (!nu.same_shape(mu))
    throw InvalidInput("shape mismatch in dominance comparison");
  if (!is_dominant(nu) || !is_dominant(mu))
    throw InvalidInput("dominance order is defined on dominant cocharacters only");
  for (int k = 0; k < nu.blocks(); ++k) {
    Integer partial_nu = 0, partial_mu = 0;
    for (int i = 0; i < nu.n(); ++i) {
      partial_nu += nu(k, i);
      partial_mu += mu(k, i);
      if (partial_nu > partial_mu)
        return false;
    }
    if (partial_nu != partial_mu)
      return false;
  }
  return true;
}

// --- roots ------------------------------------------------------------------

std::vector<Root> all_roots(const GroupShape &shape) {
  std::vector<Root> roots;
  for (int k = 0; k < shape.blocks(); ++k)
    for (int i = 0; i < shape.n(); ++i)
      for (int j = 0; j < shape.n(); ++j)
        if (i != j)
          roots.push_back({k, i, j});
  return roots;
}

Cochar coroot(const GroupShape &shape, const Root &alpha) {
  if (alpha.block < 0 || alpha.block >= shape.blocks() || alpha.i == alpha.j || alpha.i < 0 ||
      alpha.j < 0 || alpha.i >= shape.n() || alpha.j >= shape.n())
    throw InvalidInput("not a root of this group shape");
  Cochar v = zero_cochar(shape);
  v(alpha.block, alpha.i) = 1;
  v(alpha.block, alpha.j) = -1;
  return v;
}

Integer pairing(const Cochar &v, const Root &alpha) {
  return v(alpha.block, alpha.i) - v(alpha.block, alpha.j);
}

Integer lambda_alpha(const Cochar &lam, const Root &alpha) {
  Integer value = pairing(lam, alpha);
  return alpha.positive() ? value - 1 : value;
}

// --- extended affine Weyl group ----------------------------------------------

ExtAffine ExtAffine::identity(const GroupShape &shape) {
  return {zero_cochar(shape), WeylElt::identity(shape.blocks(), shape.n())};
}

bool ExtAffine::is_identity() const {
  return y.is_identity() &&
         std::all_of(chi.flat().begin(), chi.flat().end(), [](const Integer &x) { return x == 0; });
}

ExtAffine ext_mul(const ExtAffine &a, const ExtAffine &b) {
  return {a.chi + act_weyl(a.y, b.chi), a.y * b.y};
}

ExtAffine ext_inv(const ExtAffine &a) {
  WeylElt yinv = inverse(a.y);
  return {-act_weyl(yinv, a.chi), yinv};
}

ExtAffine ext_sigma(const GroupShape &shape, const ExtAffine &z) {
  return {act_sigma(shape, z.chi), sigma0(z.y)};
}

ExtAffine ext_sigma_conj(const GroupShape &shape, const ExtAffine &z, const ExtAffine &wt) {
  return ext_mul(ext_mul(ext_inv(z), wt), ext_sigma(shape, z));
}

RatCochar ext_apply(const ExtAffine &z, const RatCochar &v) {
  return to_rational(z.chi) + act_weyl(z.y, v);
}

// --- printing ---------------------------------------------------------------

namespace {
template <class T> std::string render(const BlockVector<T> &v) {
  std::ostringstream out;
  if (v.blocks() > 1)
    out << '(';
  for (int k = 0; k < v.blocks(); ++k) {
    if (k)
      out << ", ";
    out << '(';
    for (int i = 0; i < v.n(); ++i)
      out << (i ? "," : "") << kisin::to_string(v(k, i));
    out << ')';
  }
  if (v.blocks() > 1)
    out << ')';
  return out.str();
}
} // namespace

std::string to_string(const Cochar &v) { return render(v); }
std::string to_string(const RatCochar &v) { return render(v); }

std::string to_string(const Root &alpha) {
  return "alpha[" + std::to_string(alpha.block + 1) + "](" + std::to_string(alpha.i + 1) + "," +
         std::to_string(alpha.j + 1) + ")";
}

} // namespace kisin
