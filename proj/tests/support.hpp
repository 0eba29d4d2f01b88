#pragma once

// Independent reference computations for the test suites. Nothing here
// calls the library routine it is meant to check.

#include "kisin/multicopy.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

namespace kisin::testing {

using Vec = std::vector<long long>;

inline std::mt19937_64 &rng() {
  static std::mt19937_64 gen(20240917);
  return gen;
}

inline long long uniform(long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng());
}

inline Permutation random_permutation(int n) {
  Permutation p = identity_permutation(n);
  std::shuffle(p.begin(), p.end(), rng());
  return p;
}

inline WeylElt random_weyl(int blocks, int n) {
  std::vector<Permutation> perms;
  for (int k = 0; k < blocks; ++k)
    perms.push_back(random_permutation(n));
  return WeylElt(perms);
}

inline Cochar random_cochar(int blocks, int n, long long lo, long long hi) {
  Cochar v(blocks, n);
  for (int k = 0; k < blocks; ++k)
    for (int i = 0; i < n; ++i)
      v(k, i) = uniform(lo, hi);
  return v;
}

/// Solves (I - M) x = rhs by Gauss-Jordan over Q, where M is the matrix of
/// v -> w(sigma(v)) written out entry by entry from the definitions
/// (w.v)_k,i = v_k,w_k^{-1}(i) and sigma(v)_k = eps_k v_{k+1}.
inline RatCochar gauss_fixed_point(const GroupShape &shape, const WeylElt &w, const RatCochar &rhs) {
  const int N = shape.blocks(), n = shape.n(), dim = N * n;
  std::vector<std::vector<Rational>> a(dim, std::vector<Rational>(dim + 1));
  for (int k = 0; k < N; ++k)
    for (int i = 0; i < n; ++i) {
      int row = k * n + i;
      a[row][row] += 1;
      int src_block = (k + 1) % N;
      int src = inverse(w[k])[i];
      a[row][src_block * n + src] -= shape.eps(k);
      a[row][dim] = rhs(k, i);
    }
  for (int col = 0; col < dim; ++col) {
    int piv = col;
    while (piv < dim && a[piv][col] == 0)
      ++piv;
    if (piv == dim)
      throw std::runtime_error("singular system in reference solve");
    std::swap(a[piv], a[col]);
    for (int r = 0; r < dim; ++r) {
      if (r == col || a[r][col] == 0)
        continue;
      Rational factor = a[r][col] / a[col][col];
      for (int c = col; c <= dim; ++c)
        a[r][c] -= factor * a[col][c];
    }
  }
  RatCochar out(N, n);
  for (int r = 0; r < dim; ++r)
    out(r / n, r % n) = a[r][dim] / a[r][r];
  return out;
}

/// Dominance by search: mu - nu is a non-negative combination of the
/// simple coroots e_i - e_{i+1}. Precomputes, for all dominant vectors of
/// length n with entries in [lo, hi], every target reachable from each
/// source with coefficients in [0, cmax].
class CorootSearch {
public:
  CorootSearch(int n, long long lo, long long hi) : n_(n) {
    collect({}, lo, hi);
    const long long cmax = (n - 1) * (hi - lo);
    std::set<Vec> dominant_set(dominant_.begin(), dominant_.end());
    for (const Vec &nu : dominant_) {
      Vec c(std::max(n - 1, 0), 0);
      while (true) {
        Vec t = nu;
        for (int i = 0; i + 1 < n; ++i) {
          t[i] += c[i];
          t[i + 1] -= c[i];
        }
        if (dominant_set.count(t))
          reach_.insert({nu, t});
        int i = 0;
        while (i < n - 1 && c[i] == cmax)
          c[i++] = 0;
        if (i >= n - 1)
          break;
        ++c[i];
      }
    }
  }
  const std::vector<Vec> &dominant() const { return dominant_; }
  bool leq(const Vec &nu, const Vec &mu) const { return reach_.count({nu, mu}) > 0; }

private:
  void collect(Vec cur, long long lo, long long hi) {
    if (static_cast<int>(cur.size()) == n_) {
      dominant_.push_back(cur);
      return;
    }
    long long top = cur.empty() ? hi : cur.back();
    for (long long x = top; x >= lo; --x) {
      cur.push_back(x);
      collect(cur, lo, hi);
      cur.pop_back();
    }
  }
  int n_;
  std::vector<Vec> dominant_;
  std::set<std::pair<Vec, Vec>> reach_;
};

/// Plain 64-bit description of a datum for the box search.
struct SmallDatum {
  int N, n;
  std::vector<long long> eps;
  std::vector<Vec> tau;                // per block
  std::vector<std::vector<int>> w;     // one-line, 0-based
  std::vector<Vec> mu;                 // dominant per block
};

inline SmallDatum small(const FrobeniusDatum &d, const Cochar &mu) {
  SmallDatum s{d.shape.blocks(), d.shape.n(), {}, {}, {}, {}};
  for (int k = 0; k < s.N; ++k) {
    s.eps.push_back(d.shape.eps(k));
    Vec t, m;
    for (int i = 0; i < s.n; ++i) {
      t.push_back(d.tau()(k, i).convert_to<long long>());
      m.push_back(mu(k, i).convert_to<long long>());
    }
    s.tau.push_back(t);
    s.mu.push_back(m);
    s.w.push_back(d.w()[k]);
  }
  return s;
}

/// Membership in S straight from the definition, in 64-bit arithmetic.
inline bool in_s(const SmallDatum &s, const std::vector<Vec> &lam) {
  for (int k = 0; k < s.N; ++k) {
    const Vec &next = lam[(k + 1) % s.N];
    Vec nat(s.n);
    for (int j = 0; j < s.n; ++j)
      nat[s.w[k][j]] = s.eps[k] * next[j];
    for (int i = 0; i < s.n; ++i)
      nat[i] += s.tau[k][i] - lam[k][i];
    std::sort(nat.rbegin(), nat.rend());
    long long a = 0, b = 0;
    for (int i = 0; i < s.n; ++i) {
      a += nat[i];
      b += s.mu[k][i];
      if (a > b)
        return false;
    }
    if (a != b)
      return false;
  }
  return true;
}

/// Every lambda in [-B, B]^{nN} that lies in S, in lexicographic order.
inline std::vector<Cochar> box_strata(const FrobeniusDatum &d, const Cochar &mu, long long B) {
  SmallDatum s = small(d, mu);
  std::vector<Cochar> out;
  const int dim = s.N * s.n;
  Vec flat(dim, -B);
  std::vector<Vec> lam(s.N, Vec(s.n));
  while (true) {
    for (int x = 0; x < dim; ++x)
      lam[x / s.n][x % s.n] = flat[x];
    if (in_s(s, lam)) {
      Cochar c(s.N, s.n);
      for (int x = 0; x < dim; ++x)
        c(x / s.n, x % s.n) = flat[x];
      out.push_back(c);
    }
    int x = dim - 1;
    while (x >= 0 && flat[x] == B)
      flat[x--] = -B;
    if (x < 0)
      break;
    ++flat[x];
  }
  return out;
}

/// Coarse radius N (|tau| + |mu| + n |mu|).
inline long long generous_box(const FrobeniusDatum &d, const Cochar &mu) {
  Integer t = 0, m = 0;
  for (const auto &x : d.tau().flat())
    t = std::max(t, Integer(abs(x)));
  for (const auto &x : mu.flat())
    m = std::max(m, Integer(abs(x)));
  return (d.shape.blocks() * (t + m + d.shape.n() * m)).convert_to<long long>();
}

/// Tighter radius: with x = lambda - e one has x = T(x + nu) for
/// T = (w sigma)^{-1}, and T^N contracts by at least p, so
/// |x| <= N |nu| p / (p - 1) and |nu| <= |mu|.
inline long long tight_box(const FrobeniusDatum &d, const Cochar &mu) {
  Rational emax = 0;
  for (const auto &x : d.e.flat())
    emax = std::max(emax, Rational(abs(x)));
  Integer m = 0;
  for (const auto &x : mu.flat())
    m = std::max(m, Integer(abs(x)));
  const int p = d.shape.p();
  Rational bound = emax + Rational(d.shape.blocks() * m * p) / (p - 1);
  return floor(bound).convert_to<long long>() + 1;
}

/// All dominant block vectors with entries in [lo, hi].
inline std::vector<Vec> dominant_blocks(int n, long long lo, long long hi) {
  std::vector<Vec> out;
  std::vector<Vec> stack{{}};
  while (!stack.empty()) {
    Vec cur = stack.back();
    stack.pop_back();
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(cur);
      continue;
    }
    long long top = cur.empty() ? hi : cur.back();
    for (long long x = lo; x <= top; ++x) {
      Vec next = cur;
      next.push_back(x);
      stack.push_back(next);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// All dominant cocharacters with `blocks` blocks and entries in [lo, hi].
inline std::vector<Cochar> dominant_cochars(int blocks, int n, long long lo, long long hi) {
  auto per = dominant_blocks(n, lo, hi);
  std::vector<Cochar> out;
  std::vector<std::size_t> idx(blocks, 0);
  while (true) {
    Cochar c(blocks, n);
    for (int k = 0; k < blocks; ++k)
      for (int i = 0; i < n; ++i)
        c(k, i) = per[idx[k]][i];
    out.push_back(c);
    int k = blocks - 1;
    while (k >= 0 && idx[k] + 1 == per.size())
      idx[k--] = 0;
    if (k < 0)
      break;
    ++idx[k];
  }
  return out;
}

/// Simple Caruso m values in [1, q^n) for the given n, q.
inline std::vector<long long> simple_ms(int n, long long q, long long limit) {
  std::vector<long long> out;
  for (long long m = 1; m < limit; ++m)
    if (is_caruso_simple(n, Integer(q), Integer(m)))
      out.push_back(m);
  return out;
}

inline std::vector<Cochar> lambdas(const std::vector<Stratum> &strata) {
  std::vector<Cochar> out;
  for (const auto &s : strata)
    out.push_back(s.lam);
  return out;
}

} // namespace kisin::testing
