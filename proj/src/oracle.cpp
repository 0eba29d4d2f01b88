#include "kisin/oracle.hpp"

#include "kisin/strata.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace kisin {

// ---------------------------------------------------------------------------
// Laurent polynomials

LaurentPoly::LaurentPoly(int lo, std::vector<Elem> coeffs) : lo_(lo), coeffs_(std::move(coeffs)) {
  normalize();
}

LaurentPoly LaurentPoly::monomial(int exponent, Elem c) {
  return LaurentPoly(exponent, std::vector<Elem>{c});
}

void LaurentPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0)
    coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0)
    ++lead;
  if (lead) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    lo_ += static_cast<int>(lead);
  }
  if (coeffs_.empty())
    lo_ = 0;
}

LaurentPoly::Elem LaurentPoly::coeff(int exponent) const {
  int k = exponent - lo_;
  if (k < 0 || k >= static_cast<int>(coeffs_.size()))
    return 0;
  return coeffs_[k];
}

namespace {

LaurentPoly combine(const FiniteField &F, const LaurentPoly &a, const LaurentPoly &b, bool negate_b) {
  if (b.is_zero())
    return a;
  if (a.is_zero() && !negate_b)
    return b;
  int lo = std::min(a.is_zero() ? b.lo() : a.lo(), b.lo());
  int hi = std::max(a.degree(), b.degree());
  std::vector<FiniteField::Elem> c(static_cast<std::size_t>(hi - lo + 1), 0);
  for (std::size_t k = 0; k < a.coeffs().size(); ++k)
    c[a.lo() - lo + k] = a.coeffs()[k];
  for (std::size_t k = 0; k < b.coeffs().size(); ++k) {
    auto &slot = c[b.lo() - lo + k];
    slot = negate_b ? F.sub(slot, b.coeffs()[k]) : F.add(slot, b.coeffs()[k]);
  }
  return LaurentPoly(lo, std::move(c));
}

} // namespace

LaurentPoly add(const FiniteField &F, const LaurentPoly &a, const LaurentPoly &b) {
  return combine(F, a, b, false);
}

LaurentPoly sub(const FiniteField &F, const LaurentPoly &a, const LaurentPoly &b) {
  return combine(F, a, b, true);
}

LaurentPoly mul(const FiniteField &F, const LaurentPoly &a, const LaurentPoly &b) {
  if (a.is_zero() || b.is_zero())
    return {};
  const auto &x = a.coeffs();
  const auto &y = b.coeffs();
  std::vector<FiniteField::Elem> c(x.size() + y.size() - 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i])
      continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      c[i + j] = F.add(c[i + j], F.mul(x[i], y[j]));
  }
  return LaurentPoly(a.lo() + b.lo(), std::move(c));
}

LaurentPoly shift(const LaurentPoly &a, int k) {
  if (a.is_zero())
    return a;
  return LaurentPoly(a.lo() + k, a.coeffs());
}

LaurentPoly frobenius(const LaurentPoly &a, int p) {
  if (a.is_zero())
    return a;
  std::vector<FiniteField::Elem> c((a.coeffs().size() - 1) * p + 1, 0);
  for (std::size_t k = 0; k < a.coeffs().size(); ++k)
    c[k * p] = a.coeffs()[k];
  return LaurentPoly(a.lo() * p, std::move(c));
}

std::string to_string(const LaurentPoly &a) {
  if (a.is_zero())
    return "0";
  std::string out;
  for (std::size_t k = 0; k < a.coeffs().size(); ++k) {
    if (!a.coeffs()[k])
      continue;
    if (!out.empty())
      out += " + ";
    out += std::to_string(a.coeffs()[k]) + "*u^" + std::to_string(a.lo() + static_cast<int>(k));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Matrices

LaurentMatrix LaurentMatrix::identity(int n) {
  LaurentMatrix m(n);
  for (int i = 0; i < n; ++i)
    m(i, i) = LaurentPoly::monomial(0);
  return m;
}

LaurentMatrix LaurentMatrix::diagonal(const std::vector<int> &exponents) {
  LaurentMatrix m(static_cast<int>(exponents.size()));
  for (int i = 0; i < m.n(); ++i)
    m(i, i) = LaurentPoly::monomial(exponents[i]);
  return m;
}

LaurentMatrix mul(const FiniteField &F, const LaurentMatrix &a, const LaurentMatrix &b) {
  if (a.n() != b.n())
    throw InvalidInput("matrix size mismatch");
  const int n = a.n();
  LaurentMatrix c(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a(i, k).is_zero())
        continue;
      for (int j = 0; j < n; ++j)
        if (!b(k, j).is_zero())
          c(i, j) = add(F, c(i, j), mul(F, a(i, k), b(k, j)));
    }
  return c;
}

LaurentMatrix frobenius(const LaurentMatrix &a, int p) {
  LaurentMatrix out(a.n());
  for (int i = 0; i < a.n(); ++i)
    for (int j = 0; j < a.n(); ++j)
      out(i, j) = frobenius(a(i, j), p);
  return out;
}

LaurentMatrix upper_triangular_inverse(const FiniteField &F, const LaurentMatrix &g) {
  const int n = g.n();
  LaurentMatrix inv(n);
  std::vector<int> a(n);
  for (int i = 0; i < n; ++i) {
    const auto &d = g(i, i);
    if (d.coeffs().size() != 1)
      throw InvalidInput("diagonal entry is not a monomial");
    a[i] = d.lo();
    inv(i, i) = LaurentPoly(-a[i], {F.inv(d.coeffs()[0])});
    for (int j = 0; j < i; ++j)
      if (!g(i, j).is_zero())
        throw InvalidInput("matrix is not upper triangular");
  }
  for (int j = 0; j < n; ++j)
    for (int i = j - 1; i >= 0; --i) {
      LaurentPoly s;
      for (int k = i + 1; k <= j; ++k)
        s = add(F, s, mul(F, g(i, k), inv(k, j)));
      inv(i, j) = mul(F, inv(i, i), LaurentPoly(0, {F.neg(1)}));
      inv(i, j) = mul(F, inv(i, j), s);
    }
  return inv;
}

LaurentMatrix frobenius_matrix(const FrobeniusDatum &datum) {
  if (datum.shape.blocks() != 1)
    throw PreconditionError("matrix form needs a single block");
  const int n = datum.shape.n();
  LaurentMatrix b(n);
  const auto &w = datum.w()[0];
  for (int j = 0; j < n; ++j)
    b(w[j], j) = LaurentPoly::monomial(static_cast<int>(datum.tau()(0, w[j])));
  return b;
}

// ---------------------------------------------------------------------------
// Coset enumeration

namespace {

std::vector<std::vector<int>> coset_diagonals(int n, int bound, std::optional<int> det_valuation) {
  std::vector<std::vector<int>> out;
  std::vector<int> a(n, -bound);
  while (true) {
    int sum = 0;
    for (int x : a)
      sum += x;
    if (!det_valuation || sum == *det_valuation)
      out.push_back(a);
    int i = n - 1;
    while (i >= 0 && a[i] == bound)
      a[i--] = -bound;
    if (i < 0)
      break;
    ++a[i];
  }
  return out;
}

// Free coefficients of the off-diagonal entries for a fixed diagonal.
int free_digits(const std::vector<int> &a, int bound) {
  const int n = static_cast<int>(a.size());
  int digits = 0;
  for (int i = 0; i < n; ++i)
    digits += (a[i] + bound) * (n - 1 - i);
  return digits;
}

double candidate_count(int q, const std::vector<std::vector<int>> &diagonals, int bound) {
  double total = 0;
  for (const auto &a : diagonals) {
    double c = 1;
    for (int k = free_digits(a, bound); k > 0; --k)
      c *= q;
    total += c;
  }
  return total;
}

bool inside_box(const FiniteField &F, const LaurentMatrix &g, int bound) {
  LaurentMatrix inv = upper_triangular_inverse(F, g);
  for (int i = 0; i < g.n(); ++i)
    for (int j = 0; j < g.n(); ++j)
      if (inv(i, j).valuation() < -bound)
        return false;
  return true;
}

// Visits every upper triangular representative with the given diagonal
// whose lattice lies in the box.
template <class Visit>
void enumerate_diagonal(const FiniteField &F, const std::vector<int> &a, int bound, Visit &&visit) {
  const int n = static_cast<int>(a.size());
  const int q = F.size();
  struct Slot {
    int i, j, k; // entry (i, j), exponent -bound + k
  };
  std::vector<Slot> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < a[i] + bound; ++k)
        slots.push_back({i, j, k});
  std::vector<int> digit(slots.size(), 0);
  while (true) {
    LaurentMatrix g = LaurentMatrix::diagonal(a);
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (digit[s]) {
        auto &entry = g(slots[s].i, slots[s].j);
        entry = add(F, entry,
                    LaurentPoly::monomial(-bound + slots[s].k, static_cast<FiniteField::Elem>(digit[s])));
      }
    if (inside_box(F, g, bound))
      visit(g);
    std::size_t s = 0;
    while (s < digit.size() && digit[s] == q - 1)
      digit[s++] = 0;
    if (s == digit.size())
      break;
    ++digit[s];
  }
}

void check_guard(const FiniteField &F, const std::vector<std::vector<int>> &diagonals, int bound,
                 std::uint64_t guard) {
  if (candidate_count(F.size(), diagonals, bound) > static_cast<double>(guard))
    throw PreconditionError("oracle box too large for brute force");
}

} // namespace

std::uint64_t for_each_coset(const FiniteField &F, int n, int bound,
                             const std::function<void(const LaurentMatrix &)> &visit,
                             std::optional<int> det_valuation, std::uint64_t guard) {
  if (n < 1 || n > 3)
    throw PreconditionError("coset enumeration supports 1 <= n <= 3");
  if (bound < 0)
    throw InvalidInput("box bound must be non-negative");
  auto diagonals = coset_diagonals(n, bound, det_valuation);
  check_guard(F, diagonals, bound, guard);
  std::uint64_t count = 0;
  for (const auto &a : diagonals)
    enumerate_diagonal(F, a, bound, [&](const LaurentMatrix &g) {
      ++count;
      visit(g);
    });
  return count;
}

std::vector<LaurentMatrix> hnf_cosets(const FiniteField &F, int n, int bound,
                                      std::optional<int> det_valuation) {
  std::vector<LaurentMatrix> out;
  for_each_coset(F, n, bound, [&](const LaurentMatrix &g) { out.push_back(g); }, det_valuation);
  return out;
}

// ---------------------------------------------------------------------------
// Reductions

namespace {

// Clears row i0 and column j0 around the pivot (i0, j0) of valuation v,
// using column operations col_k <- U col_k - c col_j0 and row operations
// row_l <- U row_l - c row_i0 with U the unit part of the pivot. Both are
// invertible over O because v is minimal in the pivot row and column.
void eliminate(const FiniteField &F, LaurentMatrix &A, std::vector<bool> &row_live,
               std::vector<bool> &col_live, int i0, int j0) {
  const int n = A.n();
  const int v = A(i0, j0).valuation();
  const LaurentPoly unit = shift(A(i0, j0), -v);
  for (int k = 0; k < n; ++k) {
    if (!col_live[k] || k == j0 || A(i0, k).is_zero())
      continue;
    const LaurentPoly c = shift(A(i0, k), -v);
    for (int r = 0; r < n; ++r)
      if (row_live[r])
        A(r, k) = sub(F, mul(F, unit, A(r, k)), mul(F, c, A(r, j0)));
  }
  for (int l = 0; l < n; ++l) {
    if (!row_live[l] || l == i0 || A(l, j0).is_zero())
      continue;
    for (int k = 0; k < n; ++k)
      if (col_live[k] && k != j0)
        A(l, k) = mul(F, unit, A(l, k));
    A(l, j0) = LaurentPoly();
  }
  row_live[i0] = false;
  col_live[j0] = false;
}

} // namespace

std::vector<long long> elementary_divisors(const FiniteField &F, const LaurentMatrix &m) {
  const int n = m.n();
  LaurentMatrix A = m;
  std::vector<bool> row_live(n, true), col_live(n, true);
  std::vector<long long> out;
  for (int step = 0; step < n; ++step) {
    int bi = -1, bj = -1, best = INT_MAX;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (row_live[i] && col_live[j] && A(i, j).valuation() < best) {
          best = A(i, j).valuation();
          bi = i;
          bj = j;
        }
    if (bi < 0)
      throw InvalidInput("singular matrix has no elementary divisors");
    out.push_back(best);
    eliminate(F, A, row_live, col_live, bi, bj);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::vector<long long> iwahori_label(const FiniteField &F, const LaurentMatrix &g) {
  const int n = g.n();
  LaurentMatrix A = g;
  std::vector<bool> row_live(n, true), col_live(n, true);
  std::vector<long long> label(n, 0);
  for (int step = 0; step < n; ++step) {
    // Minimal key n*valuation + row: rows below the pivot then have
    // valuation >= v and rows above have valuation > v, so clearing the
    // pivot column is a left multiplication by an element of I.
    int bi = -1, bj = -1;
    long long best = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (!row_live[i] || !col_live[j] || A(i, j).is_zero())
          continue;
        long long key = static_cast<long long>(n) * A(i, j).valuation() + i;
        if (bi < 0 || key < best) {
          best = key;
          bi = i;
          bj = j;
        }
      }
    if (bi < 0)
      throw InvalidInput("singular matrix has no Iwahori label");
    label[bi] = A(bi, bj).valuation();
    eliminate(F, A, row_live, col_live, bi, bj);
  }
  return label;
}

// ---------------------------------------------------------------------------
// Points of C_mu(b)

std::vector<OraclePoint> kisin_points(const FrobeniusDatum &datum, const Cochar &mu,
                                      const FiniteField &F, int bound) {
  if (datum.shape.blocks() != 1)
    throw PreconditionError("the oracle handles f = 1 only");
  if (!datum.alcove_ok)
    throw PreconditionError("datum is not in alcove normal form");
  if (F.p() != datum.shape.p())
    throw InvalidInput("field characteristic differs from p");
  const int n = datum.shape.n();
  const int p = datum.shape.p();

  for (const auto &lam : enumerate_lambdas(datum, mu, max_enumeration()))
    for (const auto &x : lam.flat())
      if (x > bound || x < -bound)
        throw PreconditionError("box too small: " + to_string(lam) + " lies outside radius " +
                                std::to_string(bound));

  // val det(g^{-1} b sigma(g)) = |tau| + (p - 1) val det g must equal |mu|.
  Integer gap = 0;
  for (int i = 0; i < n; ++i)
    gap += mu(0, i) - datum.tau()(0, i);
  if (gap % (p - 1) != 0)
    return {};
  const int det_val = static_cast<int>(gap / (p - 1));
  if (det_val > n * bound || det_val < -n * bound)
    return {};

  auto diagonals = coset_diagonals(n, bound, det_val);
  check_guard(F, diagonals, bound, 50'000'000ULL);
  const LaurentMatrix b = frobenius_matrix(datum);

  std::vector<std::vector<OraclePoint>> found(diagonals.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t idx; (idx = next++) < diagonals.size();)
      enumerate_diagonal(F, diagonals[idx], bound, [&](const LaurentMatrix &g) {
        LaurentMatrix m = mul(F, mul(F, upper_triangular_inverse(F, g), b), frobenius(g, p));
        auto ed = elementary_divisors(F, m);
        Cochar nu(1, n, std::vector<Integer>(ed.begin(), ed.end()));
        if (!dominance_leq(nu, mu))
          return;
        auto lab = iwahori_label(F, g);
        found[idx].push_back({g, Cochar(1, n, std::vector<Integer>(lab.begin(), lab.end()))});
      });
  };
  unsigned threads = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                     static_cast<unsigned>(diagonals.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t)
    pool.emplace_back(worker);
  worker();
  for (auto &t : pool)
    t.join();

  std::vector<OraclePoint> out;
  for (auto &chunk : found)
    for (auto &pt : chunk)
      out.push_back(std::move(pt));
  return out;
}

} // namespace kisin
