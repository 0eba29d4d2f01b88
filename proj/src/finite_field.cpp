#include "kisin/finite_field.hpp"

#include "kisin/arith.hpp"

namespace kisin {

namespace {

using Digits = std::vector<int>;

Digits to_digits(int x, int p, int r) {
  Digits d(r);
  for (int i = 0; i < r; ++i, x /= p)
    d[i] = x % p;
  return d;
}

int from_digits(const Digits &d, int p) {
  int x = 0;
  for (int i = static_cast<int>(d.size()); i-- > 0;)
    x = x * p + d[i];
  return x;
}

// Product modulo x^r - sum modulus[i] x^i.
Digits poly_mul(const Digits &a, const Digits &b, const std::vector<int> &modulus, int p) {
  const int r = static_cast<int>(a.size());
  std::vector<int> prod(2 * r, 0);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  for (int deg = 2 * r - 1; deg >= r; --deg) {
    int c = prod[deg];
    if (!c)
      continue;
    prod[deg] = 0;
    for (int i = 0; i < r; ++i)
      prod[deg - r + i] = (prod[deg - r + i] + c * modulus[i]) % p;
  }
  return Digits(prod.begin(), prod.begin() + r);
}

// x^r - sum c_i x^i has no root / no factor of lower degree. Only r <= 3
// is needed, where irreducibility is the absence of roots.
bool irreducible(const std::vector<int> &modulus, int p) {
  const int r = static_cast<int>(modulus.size());
  if (r > 3)
    throw InvalidInput("field degree above 3 is not supported");
  for (int x = 0; x < p; ++x) {
    long long value = 1; // x^r
    for (int i = 0; i < r; ++i)
      value = value * x % p;
    long long xi = 1;
    for (int i = 0; i < r; ++i) {
      value = (value - modulus[i] * xi % p + p) % p;
      xi = xi * x % p;
    }
    if (value == 0)
      return false;
  }
  return true;
}

} // namespace

FiniteField::FiniteField(int p, int r) : p_(p), r_(r), q_(1) {
  if (!is_prime(p))
    throw InvalidInput("field characteristic must be prime");
  if (r < 1 || r > 3)
    throw InvalidInput("field degree must be 1, 2 or 3");
  for (int i = 0; i < r; ++i)
    q_ *= p;
  if (q_ > 256)
    throw InvalidInput("field too large for table arithmetic");

  modulus_.assign(r, 0);
  if (r == 1) {
    modulus_[0] = 0; // x = 0: digits of degree < 1 are the prime field
  } else {
    bool found = false;
    for (int code = 0; code < q_ && !found; ++code) {
      modulus_ = to_digits(code, p, r);
      found = irreducible(modulus_, p);
    }
    if (!found)
      throw InvalidInput("no irreducible polynomial found");
  }

  add_.resize(std::size_t(q_) * q_);
  mul_.resize(std::size_t(q_) * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  for (int a = 0; a < q_; ++a) {
    Digits da = to_digits(a, p, r), na(r);
    for (int i = 0; i < r; ++i)
      na[i] = (p - da[i]) % p;
    neg_[a] = static_cast<Elem>(from_digits(na, p));
    for (int b = 0; b < q_; ++b) {
      Digits db = to_digits(b, p, r), sum(r);
      for (int i = 0; i < r; ++i)
        sum[i] = (da[i] + db[i]) % p;
      add_[a * q_ + b] = static_cast<Elem>(from_digits(sum, p));
      mul_[a * q_ + b] =
          static_cast<Elem>(r == 1 ? (a * b) % p : from_digits(poly_mul(da, db, modulus_, p), p));
    }
  }
  for (int a = 1; a < q_; ++a)
    for (int b = 1; b < q_; ++b)
      if (mul_[a * q_ + b] == 1)
        inv_[a] = static_cast<Elem>(b);
}

FiniteField::Elem FiniteField::inv(Elem a) const {
  if (a == 0)
    throw InvalidInput("inverse of zero in a finite field");
  return inv_[a];
}

FiniteField::Elem FiniteField::from_int(long long k) const {
  return static_cast<Elem>(((k % p_) + p_) % p_);
}

std::string FiniteField::name() const { return "F_" + std::to_string(q_); }

} // namespace kisin
