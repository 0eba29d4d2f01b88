#include "kisin/cli.hpp"
#include "kisin/oracle.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace kisin;
using namespace kisin::testing;

namespace {

using Elem = FiniteField::Elem;

Cochar C(std::vector<std::vector<Integer>> b) { return Cochar::from_blocks(b); }

LaurentPoly random_poly(const FiniteField &F, int lo, int hi) {
  std::vector<Elem> c;
  for (int k = lo; k <= hi; ++k)
    c.push_back(Elem(uniform(0, F.size() - 1)));
  return LaurentPoly(lo, c);
}

Elem random_unit(const FiniteField &F) { return Elem(uniform(1, F.size() - 1)); }

// Naive product by coefficient convolution over exponent maps.
LaurentPoly ref_mul(const FiniteField &F, const LaurentPoly &a, const LaurentPoly &b) {
  std::map<int, Elem> acc;
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      int e = a.lo() + int(i) + b.lo() + int(j);
      acc[e] = F.add(acc[e], F.mul(a.coeffs()[i], b.coeffs()[j]));
    }
  LaurentPoly out;
  for (auto [e, c] : acc)
    out = add(F, out, LaurentPoly::monomial(e, c));
  return out;
}

LaurentPoly det2(const FiniteField &F, const LaurentMatrix &m, int r0, int r1, int c0, int c1) {
  return sub(F, mul(F, m(r0, c0), m(r1, c1)), mul(F, m(r0, c1), m(r1, c0)));
}

LaurentPoly det(const FiniteField &F, const LaurentMatrix &m) {
  if (m.n() == 1)
    return m(0, 0);
  if (m.n() == 2)
    return det2(F, m, 0, 1, 0, 1);
  LaurentPoly out;
  for (int j = 0; j < 3; ++j) {
    int c0 = j == 0 ? 1 : 0, c1 = j == 2 ? 1 : 2;
    LaurentPoly term = mul(F, m(0, j), det2(F, m, 1, 2, c0, c1));
    out = j == 1 ? sub(F, out, term) : add(F, out, term);
  }
  return out;
}

// Elementary divisors from minors: the k-th determinantal divisor is the
// minimal valuation of the k x k minors (n <= 3).
std::vector<long long> ref_divisors(const FiniteField &F, const LaurentMatrix &m) {
  const int n = m.n();
  std::vector<long long> d(n + 1, 0);
  auto vmin = [](long long a, long long b) { return std::min(a, b); };
  long long d1 = LLONG_MAX;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!m(i, j).is_zero())
        d1 = vmin(d1, m(i, j).valuation());
  d[1] = d1;
  if (n == 3) {
    long long d2 = LLONG_MAX;
    for (int r0 = 0; r0 < 3; ++r0)
      for (int r1 = r0 + 1; r1 < 3; ++r1)
        for (int c0 = 0; c0 < 3; ++c0)
          for (int c1 = c0 + 1; c1 < 3; ++c1) {
            auto x = det2(F, m, r0, r1, c0, c1);
            if (!x.is_zero())
              d2 = vmin(d2, x.valuation());
          }
    d[2] = d2;
  }
  d[n] = det(F, m).valuation();
  std::vector<long long> out;
  for (int k = 1; k <= n; ++k)
    out.push_back(d[k] - d[k - 1]);
  std::sort(out.rbegin(), out.rend());
  return out;
}

// Random element of G(O): unit diagonal, then elementary column and row
// operations with polynomial multipliers, then a permutation.
LaurentMatrix random_go(const FiniteField &F, int n) {
  LaurentMatrix k(n);
  for (int i = 0; i < n; ++i)
    k(i, i) = add(F, LaurentPoly::monomial(0, random_unit(F)), random_poly(F, 1, 2));
  // make it triangular so that it stays invertible over O
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      k(i, j) = random_poly(F, 0, 2);
  LaurentMatrix l = LaurentMatrix::identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      l(i, j) = random_poly(F, 0, 2);
  LaurentMatrix perm(n);
  Permutation s = random_permutation(n);
  for (int j = 0; j < n; ++j)
    perm(s[j], j) = LaurentPoly::monomial(0);
  return mul(F, mul(F, l, k), perm);
}

// Random element of I: lower triangular mod u.
LaurentMatrix random_iwahori(const FiniteField &F, int n) {
  LaurentMatrix h(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j)
        h(i, j) = LaurentPoly::monomial(0, random_unit(F));
      else if (i > j)
        h(i, j) = random_poly(F, 0, 2);
      else
        h(i, j) = random_poly(F, 1, 2);
    }
  // Diagonal units plus strictly lower mod u: unit determinant.
  return h;
}

// ---------------------------------------------------------------------------
// Submodules of (F_q[u]/u^{2B})^n by closure, for the coset count oracle.

struct TruncModule {
  const FiniteField &F;
  int n, len; // len = 2B
  using V = std::vector<Elem>; // n * len coefficients

  V shift(const V &v) const { // multiply by u
    V out(v.size(), 0);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k + 1 < len; ++k)
        out[i * len + k + 1] = v[i * len + k];
    return out;
  }
  V axpy(const V &x, Elem c, const V &y) const {
    V out(x.size());
    for (std::size_t t = 0; t < x.size(); ++t)
      out[t] = F.add(x[t], F.mul(c, y[t]));
    return out;
  }
  std::set<V> span(const std::vector<V> &gens) const {
    std::vector<V> basis;
    for (const V &g : gens) {
      V cur = g;
      for (int k = 0; k < len; ++k) {
        basis.push_back(cur);
        cur = shift(cur);
      }
    }
    std::set<V> out{V(std::size_t(n) * len, 0)};
    for (const V &b : basis) {
      std::set<V> next = out;
      for (const V &x : out)
        for (int c = 1; c < F.size(); ++c)
          next.insert(axpy(x, Elem(c), b));
      out.swap(next);
    }
    return out;
  }
  std::vector<V> all() const {
    std::vector<V> out;
    const int dim = n * len;
    V cur(dim, 0);
    while (true) {
      out.push_back(cur);
      int t = 0;
      while (t < dim && cur[t] == F.size() - 1)
        cur[t++] = 0;
      if (t == dim)
        break;
      ++cur[t];
    }
    return out;
  }
};

std::set<std::set<TruncModule::V>> all_submodules(const TruncModule &M) {
  // Every submodule of a rank-n module over this local ring needs at most
  // n generators.
  auto elems = M.all();
  std::set<std::set<TruncModule::V>> out;
  if (M.n == 1) {
    for (const auto &a : elems)
      out.insert(M.span({a}));
  } else {
    for (const auto &a : elems)
      for (const auto &b : elems)
        out.insert(M.span({a, b}));
  }
  return out;
}

std::set<TruncModule::V> lattice_image(const TruncModule &M, const LaurentMatrix &g, int B) {
  std::vector<TruncModule::V> gens;
  for (int j = 0; j < g.n(); ++j) {
    TruncModule::V v(std::size_t(M.n) * M.len, 0);
    for (int i = 0; i < g.n(); ++i)
      for (int k = 0; k < M.len; ++k)
        v[i * M.len + k] = g(i, j).coeff(k - B);
    gens.push_back(v);
  }
  return M.span(gens);
}

} // namespace

TEST(FiniteField, Axioms) {
  for (auto [p, r] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 1}, {3, 2}, {5, 1}, {2, 3}}) {
    FiniteField F(p, r);
    const int q = F.size();
    ASSERT_EQ(q, ipow(p, r));
    for (int a = 0; a < q; ++a) {
      EXPECT_EQ(F.add(Elem(a), F.neg(Elem(a))), 0);
      if (a != 0)
        EXPECT_EQ(F.mul(Elem(a), F.inv(Elem(a))), 1);
      for (int b = 0; b < q; ++b) {
        EXPECT_EQ(F.add(Elem(a), Elem(b)), F.add(Elem(b), Elem(a)));
        EXPECT_EQ(F.mul(Elem(a), Elem(b)), F.mul(Elem(b), Elem(a)));
        for (int c = 0; c < q; ++c)
          EXPECT_EQ(F.mul(Elem(a), F.add(Elem(b), Elem(c))),
                    F.add(F.mul(Elem(a), Elem(b)), F.mul(Elem(a), Elem(c))));
      }
    }
    // The multiplicative group is cyclic of order q - 1: x^(q-1) = 1.
    for (int a = 1; a < q; ++a) {
      Elem x = 1;
      for (int t = 0; t < q - 1; ++t)
        x = F.mul(x, Elem(a));
      EXPECT_EQ(x, 1);
    }
    EXPECT_THROW(F.inv(0), std::exception);
  }
  EXPECT_THROW(FiniteField(4, 1), InvalidInput);
}

TEST(Laurent, Arithmetic) {
  FiniteField F(3, 2);
  for (int trial = 0; trial < 300; ++trial) {
    LaurentPoly a = random_poly(F, int(uniform(-3, 2)), int(uniform(2, 5)));
    LaurentPoly b = random_poly(F, int(uniform(-3, 2)), int(uniform(2, 5)));
    ASSERT_EQ(mul(F, a, b), ref_mul(F, a, b));
    ASSERT_EQ(sub(F, add(F, a, b), b), a);
    ASSERT_TRUE(sub(F, a, a).is_zero());
    ASSERT_EQ(mul(F, shift(a, 2), b), shift(mul(F, a, b), 2));
    ASSERT_EQ(frobenius(mul(F, a, b), 3), mul(F, frobenius(a, 3), frobenius(b, 3)));
    if (!a.is_zero())
      ASSERT_EQ(frobenius(a, 3).valuation(), 3 * a.valuation());
  }
  EXPECT_EQ(to_string(LaurentPoly()), "0");
  EXPECT_EQ(LaurentPoly(-1, {0, 0, 2, 0}), LaurentPoly::monomial(1, 2));
  EXPECT_EQ(LaurentPoly().valuation(), INT_MAX);
}

TEST(Laurent, UpperTriangularInverse) {
  FiniteField F(2, 1);
  for (const auto &g : hnf_cosets(F, 3, 1)) {
    LaurentMatrix inv = upper_triangular_inverse(F, g);
    ASSERT_EQ(mul(F, g, inv), LaurentMatrix::identity(3));
  }
}

TEST(Cosets, RankOne) {
  FiniteField F(3, 1);
  auto cs = hnf_cosets(F, 1, 2);
  ASSERT_EQ(cs.size(), 5u);
  std::set<int> exps;
  for (const auto &g : cs)
    exps.insert(g(0, 0).valuation());
  EXPECT_EQ(exps, (std::set<int>{-2, -1, 0, 1, 2}));
}

TEST(Cosets, MatchSubmoduleCount) {
  for (auto [p, r, n] : std::vector<std::tuple<int, int, int>>{{2, 1, 2}, {3, 1, 2}, {2, 2, 1}, {2, 1, 1}}) {
    FiniteField F(p, r);
    const int B = 1;
    TruncModule M{F, n, 2 * B};
    auto subs = all_submodules(M);
    auto cs = hnf_cosets(F, n, B);
    std::set<std::set<TruncModule::V>> images;
    for (const auto &g : cs)
      images.insert(lattice_image(M, g, B));
    EXPECT_EQ(images.size(), cs.size()) << "duplicate cosets over " << F.name();
    EXPECT_EQ(images, subs) << F.name() << " n=" << n;
  }
  // n = 2, B = 1, F_2: sum over diagonals of q^{free digits}.
  EXPECT_EQ(hnf_cosets(FiniteField(2, 1), 2, 1).size(), 15u);
}

TEST(Cosets, IdentityPresentAndGuard) {
  FiniteField F(2, 1);
  for (int n = 1; n <= 3; ++n) {
    auto cs = hnf_cosets(F, n, 1);
    EXPECT_NE(std::find(cs.begin(), cs.end(), LaurentMatrix::identity(n)), cs.end());
  }
  EXPECT_THROW(hnf_cosets(F, 4, 1), PreconditionError);
  EXPECT_THROW(for_each_coset(F, 3, 3, [](const LaurentMatrix &) {}, std::nullopt, 1000),
               PreconditionError);
}

TEST(ElementaryDivisors, Examples) {
  FiniteField F(3, 1);
  EXPECT_EQ(elementary_divisors(F, LaurentMatrix::diagonal({2, 0})), (std::vector<long long>{2, 0}));
  LaurentMatrix j(2);
  j(0, 0) = LaurentPoly::monomial(1);
  j(0, 1) = LaurentPoly::monomial(0);
  j(1, 1) = LaurentPoly::monomial(1);
  EXPECT_EQ(elementary_divisors(F, j), (std::vector<long long>{2, 0}));
  EXPECT_EQ(elementary_divisors(F, random_go(F, 3)), (std::vector<long long>{0, 0, 0}));
  EXPECT_THROW(elementary_divisors(F, LaurentMatrix(2)), InvalidInput);
}

TEST(ElementaryDivisors, MatchMinorOracle) {
  for (auto [p, r] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}}) {
    FiniteField F(p, r);
    for (int trial = 0; trial < 400; ++trial) {
      int n = int(uniform(1, 3));
      LaurentMatrix m(n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          m(i, j) = uniform(0, 3) ? random_poly(F, int(uniform(-2, 1)), 2) : LaurentPoly();
      if (det(F, m).is_zero())
        continue;
      ASSERT_EQ(elementary_divisors(F, m), ref_divisors(F, m));
      // sigma scales the divisors by p and respects products.
      auto ed = elementary_divisors(F, m);
      for (auto &x : ed)
        x *= p;
      ASSERT_EQ(elementary_divisors(F, frobenius(m, p)), ed);
      LaurentMatrix k = random_go(F, n);
      ASSERT_EQ(frobenius(mul(F, m, k), p), mul(F, frobenius(m, p), frobenius(k, p)));
      ASSERT_EQ(elementary_divisors(F, mul(F, mul(F, random_go(F, n), m), k)),
                elementary_divisors(F, m));
    }
  }
}

TEST(IwahoriLabel, RoundTrip) {
  for (auto [p, r] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}}) {
    FiniteField F(p, r);
    for (int trial = 0; trial < 300; ++trial) {
      int n = int(uniform(1, 3));
      std::vector<int> lam(n);
      for (auto &x : lam)
        x = int(uniform(-3, 3));
      LaurentMatrix ul = LaurentMatrix::diagonal(lam);
      std::vector<long long> want(lam.begin(), lam.end());
      ASSERT_EQ(iwahori_label(F, ul), want);
      LaurentMatrix g = mul(F, mul(F, random_iwahori(F, n), ul), random_go(F, n));
      ASSERT_EQ(iwahori_label(F, g), want);
    }
  }
}

TEST(IwahoriLabel, LowerUnipotent) {
  FiniteField F(3, 1);
  LaurentMatrix l = LaurentMatrix::identity(2);
  l(1, 0) = LaurentPoly(0, {2, 0, 0, 1});
  LaurentMatrix g = mul(F, l, LaurentMatrix::diagonal({1, -1}));
  EXPECT_EQ(iwahori_label(F, g), (std::vector<long long>{1, -1}));
}

namespace {

std::map<Cochar, int> label_counts(const std::vector<OraclePoint> &pts) {
  std::map<Cochar, int> out;
  for (const auto &pt : pts)
    ++out[pt.label];
  return out;
}

int box_for(const std::vector<Stratum> &strata) {
  int B = 1;
  for (const auto &s : strata)
    for (const auto &x : s.lam.flat())
      B = std::max(B, abs(x).convert_to<int>());
  return B;
}

} // namespace

TEST(KisinPoints, Gl2Partition) {
  for (int p : {2, 3})
    for (const Cochar &mu : dominant_cochars(1, 2, -1, 2)) {
      FrobeniusDatum d = caruso_datum(2, 1, p, 1);
      auto strata = enumerate_strata(d, mu);
      int B = box_for(strata);
      for (int r = 1; r <= 2; ++r) {
        FiniteField F(p, r);
        auto pts = kisin_points(d, mu, F, B);
        auto counts = label_counts(pts);
        std::set<Cochar> s;
        for (const auto &st : strata)
          s.insert(st.lam);
        for (const auto &[lam, c] : counts)
          EXPECT_TRUE(s.count(lam)) << to_string(lam);
        for (const auto &st : strata) {
          std::vector<int> e;
          for (const auto &x : st.lam.flat())
            e.push_back(x.convert_to<int>());
          LaurentMatrix ul = LaurentMatrix::diagonal(e);
          bool present = std::any_of(pts.begin(), pts.end(), [&](const OraclePoint &pt) {
            return pt.g == ul;
          });
          EXPECT_TRUE(present) << to_string(st.lam);
          if (st.singleton.verdict == Singleton::proven)
            EXPECT_EQ(counts[st.lam], 1) << to_string(st.lam) << " over " << F.name();
        }
        if (strata.empty())
          EXPECT_TRUE(pts.empty());
      }
    }
}

TEST(KisinPoints, Gl3Small) {
  FrobeniusDatum d = caruso_datum(3, 1, 2, 1);
  FiniteField F(2, 1);
  for (const Cochar &mu : dominant_cochars(1, 3, 0, 1)) {
    auto strata = enumerate_strata(d, mu);
    auto counts = label_counts(kisin_points(d, mu, F, box_for(strata)));
    for (const auto &st : strata) {
      EXPECT_GE(counts[st.lam], 1);
      if (st.singleton.verdict == Singleton::proven)
        EXPECT_EQ(counts[st.lam], 1);
    }
    EXPECT_EQ(counts.size(), strata.size());
  }
}

TEST(KisinPoints, Preconditions) {
  FiniteField F(3, 1);
  FrobeniusDatum d = caruso_datum(2, 1, 3, 1);
  EXPECT_THROW(kisin_points(d, C({{3, 0}}), FiniteField(2, 1), 2), InvalidInput);
  // (3,0) has S containing (1,0); a box of radius 0 cannot hold it.
  EXPECT_THROW(kisin_points(d, C({{3, 0}}), F, 0), PreconditionError);
  Counterexample b = counterexample('b', 3);
  EXPECT_THROW(kisin_points(b.datum, b.mu, F, 2), PreconditionError);
}
