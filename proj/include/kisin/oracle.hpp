#pragma once

// Brute-force points of C_mu(b) for a single GL_n block (f = 1) over a
// small finite field: lattices g O^n inside a box, the test
// g^{-1} b sigma(g) in the closure of G(O) u^mu G(O), and the Iwahori
// label of each point.
//
// Every matrix here has Laurent polynomial entries and all reductions use
// only unit scalings and O-multiples that are themselves polynomials, so
// the arithmetic is exact and never loses precision.

#include "kisin/finite_field.hpp"
#include "kisin/normal_form.hpp"

#include <climits>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace kisin {

/// Finite Laurent polynomial sum_{k} c_k u^{lo+k}; zero has no coefficients.
class LaurentPoly {
public:
  using Elem = FiniteField::Elem;

  LaurentPoly() = default;
  LaurentPoly(int lo, std::vector<Elem> coeffs);
  static LaurentPoly monomial(int exponent, Elem c = 1);

  bool is_zero() const { return coeffs_.empty(); }
  /// INT_MAX for zero.
  int valuation() const { return is_zero() ? INT_MAX : lo_; }
  int degree() const { return is_zero() ? INT_MIN : lo_ + static_cast<int>(coeffs_.size()) - 1; }
  Elem coeff(int exponent) const;
  int lo() const { return lo_; }
  const std::vector<Elem> &coeffs() const { return coeffs_; }

  friend bool operator==(const LaurentPoly &, const LaurentPoly &) = default;

private:
  void normalize();
  int lo_ = 0;
  std::vector<Elem> coeffs_;
};

LaurentPoly add(const FiniteField &F, const LaurentPoly &a, const LaurentPoly &b);
LaurentPoly sub(const FiniteField &F, const LaurentPoly &a, const LaurentPoly &b);
LaurentPoly mul(const FiniteField &F, const LaurentPoly &a, const LaurentPoly &b);
LaurentPoly shift(const LaurentPoly &a, int k); // a * u^k
/// u -> u^p with coefficients fixed.
LaurentPoly frobenius(const LaurentPoly &a, int p);
std::string to_string(const LaurentPoly &a);

class LaurentMatrix {
public:
  LaurentMatrix() = default;
  explicit LaurentMatrix(int n) : n_(n), entries_(std::size_t(n) * n) {}
  static LaurentMatrix identity(int n);
  /// diag(u^{exponents}).
  static LaurentMatrix diagonal(const std::vector<int> &exponents);

  int n() const { return n_; }
  LaurentPoly &operator()(int i, int j) { return entries_[std::size_t(i) * n_ + j]; }
  const LaurentPoly &operator()(int i, int j) const { return entries_[std::size_t(i) * n_ + j]; }

  friend bool operator==(const LaurentMatrix &, const LaurentMatrix &) = default;

private:
  int n_ = 0;
  std::vector<LaurentPoly> entries_;
};

LaurentMatrix mul(const FiniteField &F, const LaurentMatrix &a, const LaurentMatrix &b);
LaurentMatrix frobenius(const LaurentMatrix &a, int p);
/// Inverse of an upper triangular matrix with monomial diagonal.
LaurentMatrix upper_triangular_inverse(const FiniteField &F, const LaurentMatrix &g);
/// u^tau w as a matrix, w acting by e_j -> e_{w(j)}.
LaurentMatrix frobenius_matrix(const FrobeniusDatum &datum);

/// Column Hermite representatives of G(L)/G(O) for lattices between
/// u^bound O^n and u^{-bound} O^n: upper triangular, diagonal u^{a_i},
/// entry (i, j) with exponents in [-bound, a_i). When det_valuation is
/// given, only diagonals with sum a_i equal to it are produced.
/// Throws PreconditionError when the box holds more than `guard` candidates.
std::uint64_t for_each_coset(const FiniteField &F, int n, int bound,
                             const std::function<void(const LaurentMatrix &)> &visit,
                             std::optional<int> det_valuation = std::nullopt,
                             std::uint64_t guard = 50'000'000ULL);
std::vector<LaurentMatrix> hnf_cosets(const FiniteField &F, int n, int bound,
                                      std::optional<int> det_valuation = std::nullopt);

/// Dominant exponent vector nu with m in G(O) u^nu G(O). Throws
/// InvalidInput for singular m.
std::vector<long long> elementary_divisors(const FiniteField &F, const LaurentMatrix &m);

/// The lambda with g in I u^lambda G(O), I the preimage of the lower
/// triangular Borel.
std::vector<long long> iwahori_label(const FiniteField &F, const LaurentMatrix &g);

struct OraclePoint {
  LaurentMatrix g;
  Cochar label;
};

/// All points of C_mu(b) in the box over F. Requires a single block and an
/// alcove datum; throws PreconditionError when some lambda in S falls
/// outside the box.
std::vector<OraclePoint> kisin_points(const FrobeniusDatum &datum, const Cochar &mu,
                                      const FiniteField &F, int bound);

} // namespace kisin
