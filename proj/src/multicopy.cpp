#include "kisin/multicopy.hpp"

#include <algorithm>
#include <set>

namespace kisin {

namespace {

template <class T> BlockVector<T> interleave_impl(const std::vector<BlockVector<T>> &copies) {
  if (copies.empty())
    throw InvalidInput("need at least one copy");
  const int d = static_cast<int>(copies.size());
  const int f = copies.front().blocks(), n = copies.front().n();
  BlockVector<T> out(d * f, n);
  for (int c = 0; c < d; ++c) {
    if (!copies[c].same_shape(copies.front()))
      throw InvalidInput("copies of unequal shape");
    for (int j = 0; j < f; ++j)
      for (int i = 0; i < n; ++i)
        out(interleave_index(d, c, j), i) = copies[c](j, i);
  }
  return out;
}

} // namespace

RatCochar interleave(const std::vector<RatCochar> &copies) { return interleave_impl(copies); }
Cochar interleave(const std::vector<Cochar> &copies) { return interleave_impl(copies); }

MultiDatum lift(const FrobeniusDatum &base, int d) {
  if (d < 1)
    throw InvalidInput("number of copies must be positive");
  const GroupShape &shape = base.shape;
  const int f = shape.blocks(), n = shape.n();

  std::vector<int> eps(std::size_t(d) * f, 1);
  for (int j = 0; j < f; ++j)
    eps[interleave_index(d, d - 1, j)] = shape.eps(j);
  GroupShape lifted_shape(n, std::move(eps), shape.p());

  Cochar tau(d * f, n);
  std::vector<Permutation> perms(std::size_t(d) * f, identity_permutation(n));
  for (int j = 0; j < f; ++j) {
    const int k = interleave_index(d, d - 1, j);
    for (int i = 0; i < n; ++i)
      tau(k, i) = base.tau()(j, i);
    perms[k] = base.w()[j];
  }
  FrobeniusDatum lifted = make_datum(lifted_shape, tau, WeylElt(std::move(perms)));
  if (lifted.e != interleave(std::vector<RatCochar>(d, base.e)))
    throw TheoremViolation("lifted fixed point is not the diagonal copy of e");
  return {base, d, std::move(lifted)};
}

Cochar decompose_mu(const Cochar &mu, int d) {
  if (d < 1)
    throw InvalidInput("number of copies must be positive");
  const int f = mu.blocks(), n = mu.n();
  std::vector<Cochar> copies(d, Cochar(f, n));
  for (int j = 0; j < f; ++j) {
    for (int i = 1; i < n; ++i)
      if (mu(j, i) != 0)
        throw InvalidInput("mu is not of the form (m w1, ..., m w1)");
    const Integer &m = mu(j, 0);
    if (m < 0 || m > d)
      throw InvalidInput("multiplicity " + to_string(m) + " outside [0, d]");
    for (int c = 0; c < d; ++c)
      copies[c](j, 0) = c < m ? 1 : 0;
  }
  return interleave(copies);
}

DescentStats descent_stats(const std::vector<Rational> &v) {
  if (v.empty())
    throw InvalidInput("descent statistics of an empty vector");
  Rational lo = *std::min_element(v.begin(), v.end());
  DescentStats s{0, 0};
  for (const auto &x : v) {
    s.delta += x;
    s.h += floor(x - lo);
  }
  s.delta -= lo * static_cast<long>(v.size());
  return s;
}

std::vector<Rational> varsigma(const std::vector<Rational> &v) {
  if (v.empty())
    return v;
  Rational hi = *std::max_element(v.begin(), v.end());
  std::vector<Rational> out = v;
  for (auto &x : out)
    if (x == hi)
      x -= 1;
  return out;
}

namespace {

void require_omega_blocks(const Cochar &mu_bullet) {
  for (int k = 0; k < mu_bullet.blocks(); ++k)
    for (int i = 0; i < mu_bullet.n(); ++i) {
      const Integer &x = mu_bullet(k, i);
      if (!(x == 0 || (i == 0 && x == 1)))
        throw InvalidInput("mu. must have blocks 0 or w1");
    }
}

} // namespace

Stratum unique_zero_stratum(const MultiDatum &multi, const Cochar &mu_bullet) {
  require_omega_blocks(mu_bullet);
  auto strata = enumerate_strata(multi.lifted, mu_bullet);
  if (strata.empty())
    throw PreconditionError("C_mu.(b) is empty");
  std::vector<const Stratum *> zero;
  for (const auto &s : strata)
    if (s.dim && *s.dim == 0)
      zero.push_back(&s);
  if (zero.size() != 1)
    throw TheoremViolation("expected exactly one zero-dimensional stratum, found " +
                           std::to_string(zero.size()));
  return *zero.front();
}

RecursionCheck recursion_check(const MultiDatum &multi, const Cochar &mu_bullet,
                               const Cochar &lam_bullet) {
  require_omega_blocks(mu_bullet);
  const FrobeniusDatum &lifted = multi.lifted;
  if (!fits(lifted.shape, lam_bullet) || !fits(lifted.shape, mu_bullet))
    throw InvalidInput("shape mismatch in recursion check");
  const int N = lifted.shape.blocks(), n = lifted.shape.n();

  RatCochar hat = to_rational(lam_bullet) - lifted.e;
  RecursionCheck result;
  for (int k = 0; k < N; ++k) {
    const int next = (k + 1) % N;
    // eps^k w^k(hat^{k+1}) on block k alone
    std::vector<Rational> image(n);
    for (int j = 0; j < n; ++j)
      image[lifted.w()[k][j]] = hat(next, j) * lifted.shape.eps(k);
    if (mu_bullet(k, 0) == 1)
      image = varsigma(image);
    if (!std::equal(image.begin(), image.end(), hat.block(k).begin())) {
      result.failing_block = k;
      break;
    }
  }
  for (int k = 0; k < N; ++k) {
    std::vector<Rational> blk(hat.block(k).begin(), hat.block(k).end());
    if (descent_stats(blk).h == 0) {
      result.zero_height_block = k;
      break;
    }
  }
  result.ok = result.failing_block < 0 && result.zero_height_block.has_value();
  return result;
}

Cochar project_first(const MultiDatum &multi, const Cochar &lam_bullet) {
  if (!fits(multi.lifted.shape, lam_bullet))
    throw InvalidInput("lambda. does not match the lifted shape");
  const int f = multi.base.shape.blocks(), n = multi.base.shape.n();
  Cochar out(f, n);
  for (int j = 0; j < f; ++j)
    for (int i = 0; i < n; ++i)
      out(j, i) = lam_bullet(interleave_index(multi.d, 0, j), i);
  return out;
}

OmegaOneAnalysis analyze_omega1(const FrobeniusDatum &datum, const Cochar &mu,
                                std::optional<int> d) {
  OmegaOneAnalysis a;
  a.chi = omega1_twist(mu);
  TwistedInstance twisted = central_twist(datum, mu, a.chi);
  a.mu_twisted = twisted.mu;
  int needed = 1;
  for (int j = 0; j < mu.blocks(); ++j)
    needed = std::max(needed, a.mu_twisted(j, 0).convert_to<int>());
  a.d = d.value_or(needed);
  if (a.d < needed)
    throw InvalidInput("d = " + std::to_string(a.d) + " is smaller than max m_j = " +
                       std::to_string(needed));

  a.mu_bullet = decompose_mu(a.mu_twisted, a.d);
  a.multi = lift(twisted.datum, a.d);
  a.strata_bullet = enumerate_lambdas(a.multi.lifted, a.mu_bullet, max_enumeration());
  a.strata = enumerate_lambdas(datum, mu, max_enumeration());

  std::set<Cochar> projected;
  for (const auto &lb : a.strata_bullet)
    projected.insert(project_first(a.multi, lb));
  a.projection_covers = projected == std::set<Cochar>(a.strata.begin(), a.strata.end());

  if (!a.strata_bullet.empty()) {
    a.zero_stratum = unique_zero_stratum(a.multi, a.mu_bullet);
    a.recursion = recursion_check(a.multi, a.mu_bullet, a.zero_stratum->lam);
  }
  return a;
}

} // namespace kisin
