#include "kisin/normal_form.hpp"

#include <algorithm>
#include <numeric>

namespace kisin {

FrobeniusDatum make_datum(const GroupShape &shape, const Cochar &tau, const WeylElt &w) {
  if (!fits(shape, tau) || w.blocks() != shape.blocks() || w.n() != shape.n())
    throw InvalidInput("tau and w do not match the group shape");
  ExtAffine wt{tau, w};
  RatCochar e = fixed_point(shape, wt);
  bool ok = in_alcove(e);
  return {shape, std::move(wt), std::move(e), ok};
}

TwistedPermutation::TwistedPermutation(const GroupShape &shape, const WeylElt &w) : shape_(shape) {
  if (w.blocks() != shape.blocks() || w.n() != shape.n())
    throw InvalidInput("Weyl element does not match the group shape");
  if (shape.frobenius_weight() == 0)
    throw PreconditionError("1 - w.sigma is singular: no block carries the scale p");
  const int N = shape.blocks(), n = shape.n();
  std::vector<Permutation> winv;
  for (int k = 0; k < N; ++k)
    winv.push_back(inverse(w[k]));

  std::vector<bool> seen(std::size_t(N) * n, false);
  for (int start = 0; start < N * n; ++start) {
    if (seen[start])
      continue;
    Cycle c;
    c.total = 1;
    int x = start;
    while (!seen[x]) {
      seen[x] = true;
      int k = x / n, i = x % n;
      c.positions.push_back(x);
      c.scales.push_back(shape.eps(k));
      c.total *= shape.eps(k);
      x = ((k + 1) % N) * n + winv[k][i];
    }
    cycles_.push_back(std::move(c));
  }
}

// Along a cycle v[x_t] = r[x_t] + s_t v[x_{t+1}], so
// v[x_0] = (sum_t (s_0...s_{t-1}) r[x_t]) / (1 - total), and the remaining
// coordinates follow backwards from v[x_{L-1}] = r[x_{L-1}] + s_{L-1} v[x_0].
RatCochar TwistedPermutation::solve(const RatCochar &rhs) const {
  if (!fits(shape_, rhs))
    throw InvalidInput("right-hand side does not match the group shape");
  std::vector<Rational> out(rhs.flat().size());
  const auto &r = rhs.flat();
  for (const auto &c : cycles_) {
    const std::size_t L = c.positions.size();
    Rational acc = 0;
    Integer prefix = 1;
    for (std::size_t t = 0; t < L; ++t) {
      acc += r[c.positions[t]] * prefix;
      prefix *= c.scales[t];
    }
    Rational v0 = acc / Rational(1 - c.total);
    out[c.positions[0]] = v0;
    Rational next = v0;
    for (std::size_t t = L; t-- > 1;) {
      next = r[c.positions[t]] + next * c.scales[t];
      out[c.positions[t]] = next;
    }
  }
  return RatCochar(shape_.blocks(), shape_.n(), std::move(out));
}

std::optional<Cochar> TwistedPermutation::solve_integral(const Cochar &rhs) const {
  if (!fits(shape_, rhs))
    throw InvalidInput("right-hand side does not match the group shape");
  std::vector<Integer> out(rhs.flat().size());
  const auto &r = rhs.flat();
  for (const auto &c : cycles_) {
    const std::size_t L = c.positions.size();
    Integer acc = 0;
    Integer prefix = 1;
    for (std::size_t t = 0; t < L; ++t) {
      acc += r[c.positions[t]] * prefix;
      prefix *= c.scales[t];
    }
    Integer den = 1 - c.total;
    if (acc % den != 0)
      return std::nullopt;
    Integer next = acc / den;
    out[c.positions[0]] = next;
    for (std::size_t t = L; t-- > 1;) {
      next = r[c.positions[t]] + next * c.scales[t];
      out[c.positions[t]] = next;
    }
  }
  return Cochar(shape_.blocks(), shape_.n(), std::move(out));
}

RatCochar fixed_point(const GroupShape &shape, const ExtAffine &wt) {
  return TwistedPermutation(shape, wt.y).solve(to_rational(wt.chi));
}

bool in_alcove(const RatCochar &e) {
  for (int k = 0; k < e.blocks(); ++k) {
    for (int i = 0; i + 1 < e.n(); ++i)
      if (!(e(k, i) > e(k, i + 1)))
        return false;
    if (!(e(k, 0) - e(k, e.n() - 1) < 1))
      return false;
  }
  return true;
}

bool in_general_position(const RatCochar &e) {
  for (int k = 0; k < e.blocks(); ++k)
    for (int i = 0; i < e.n(); ++i) {
      if (is_integral(e(k, i)))
        return false;
      for (int j = i + 1; j < e.n(); ++j)
        if (is_integral(Rational(e(k, i) - e(k, j))))
          return false;
    }
  return true;
}

bool is_caruso_simple(int n, const Integer &q, const Integer &m) {
  if (n < 1)
    throw InvalidInput("n must be positive");
  Integer full = ipow(q, unsigned(n)) - 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0)
      continue;
    if ((m * (ipow(q, unsigned(d)) - 1)) % full == 0)
      return false;
  }
  return true;
}

FrobeniusDatum caruso_unreduced(int n, int f, int p, const Integer &m) {
  GroupShape shape = GroupShape::restriction(n, f, p);
  Cochar tau = zero_cochar(shape);
  tau(0, 0) = m;
  std::vector<Permutation> perms(f, identity_permutation(n));
  for (int i = 0; i < n; ++i)
    perms[0][i] = (i + 1) % n;
  return make_datum(shape, tau, WeylElt(std::move(perms)));
}

FrobeniusDatum caruso_datum(int n, int f, int p, const Integer &m) {
  if (!is_caruso_simple(n, ipow(Integer(p), unsigned(f)), m))
    throw PreconditionError("m = " + to_string(m) + " does not give a simple datum");
  FrobeniusDatum datum = caruso_unreduced(n, f, p, m);
  for (const auto &x : datum.e.flat())
    if (is_integral(x))
      throw PreconditionError("fixed point has an integral entry; datum is not simple");
  return alcove_reduce(datum).datum;
}

AlcoveReduction alcove_reduce(const FrobeniusDatum &datum) {
  if (!in_general_position(datum.e))
    throw PreconditionError("fixed point not in general position");
  if (in_alcove(datum.e))
    return {ExtAffine::identity(datum.shape), datum};

  const int N = datum.shape.blocks(), n = datum.shape.n();
  Cochar chi = zero_cochar(datum.shape);
  std::vector<Permutation> ys;
  for (int k = 0; k < N; ++k) {
    auto blk = datum.e.block(k);
    Rational lo = *std::min_element(blk.begin(), blk.end());
    std::vector<Rational> shifted(n);
    for (int i = 0; i < n; ++i) {
      chi(k, i) = floor(blk[i] - lo);
      shifted[i] = blk[i] - Rational(chi(k, i));
    }
    // y(r) = index of the r-th largest shifted coordinate, so that
    // (y^{-1} x)_r = x_{y(r)} is decreasing.
    Permutation y = identity_permutation(n);
    std::sort(y.begin(), y.end(), [&](int a, int b) { return shifted[a] > shifted[b]; });
    ys.push_back(std::move(y));
  }
  ExtAffine z{std::move(chi), WeylElt(std::move(ys))};
  FrobeniusDatum reduced;
  reduced.shape = datum.shape;
  reduced.wt = ext_sigma_conj(datum.shape, z, datum.wt);
  reduced.e = ext_apply(ext_inv(z), datum.e);
  if (reduced.e != fixed_point(datum.shape, reduced.wt))
    throw TheoremViolation("fixed point not transported by sigma-conjugation");
  reduced.alcove_ok = in_alcove(reduced.e);
  if (!reduced.alcove_ok)
    throw TheoremViolation("alcove reduction did not land in the alcove");
  return {std::move(z), std::move(reduced)};
}

Integer gcd_power_fact(const Integer &q, unsigned a, unsigned b) {
  if (q < 2 || a < 1 || b < 1)
    throw InvalidInput("gcd_power_fact needs q >= 2 and positive exponents");
  Integer g = boost::multiprecision::gcd(ipow(q, a) - 1, ipow(q, b) - 1);
  if (g != ipow(q, std::gcd(a, b)) - 1)
    throw TheoremViolation("gcd(q^a - 1, q^b - 1) != q^gcd(a,b) - 1");
  return g;
}

} // namespace kisin
