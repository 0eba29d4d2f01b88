#pragma once

// Frobenius data b = u^tau w up to sigma-conjugacy: exact fixed points of
// wt.sigma, Caruso's simple representatives, and reduction of the fixed
// point into the fundamental alcove.

#include "kisin/core.hpp"

#include <optional>

namespace kisin {

struct FrobeniusDatum {
  GroupShape shape;
  ExtAffine wt; // u^tau w
  RatCochar e;  // fixed point of wt.sigma
  bool alcove_ok = false;

  const Cochar &tau() const { return wt.chi; }
  const WeylElt &w() const { return wt.y; }
};

/// Datum for u^tau w with its fixed point solved and the alcove certificate
/// evaluated. Throws InvalidInput on shape mismatch.
FrobeniusDatum make_datum(const GroupShape &shape, const Cochar &tau, const WeylElt &w);

/// Cycle decomposition of the linear map v -> w(sigma(v)) on coordinates.
///
/// Coordinate (k, i) receives eps[k] times coordinate (k+1, w_k^{-1}(i)).
/// Every cycle meets every block equally often, so when some eps is p the
/// total scale of each cycle is a positive power of p and 1 - w.sigma is
/// invertible.
class TwistedPermutation {
public:
  TwistedPermutation(const GroupShape &shape, const WeylElt &w);

  /// Unique v with v = rhs + w(sigma(v)).
  RatCochar solve(const RatCochar &rhs) const;
  /// Same, but only when the solution is integral.
  std::optional<Cochar> solve_integral(const Cochar &rhs) const;

  const GroupShape &shape() const { return shape_; }

private:
  struct Cycle {
    std::vector<int> positions; // flat indices x_0, x_1 = src(x_0), ...
    std::vector<int> scales;    // scale attached to each step
    Integer total;              // product of scales
  };
  GroupShape shape_;
  std::vector<Cycle> cycles_;
};

/// e = tau + w(sigma(e)), solved exactly. Throws PreconditionError when no
/// block carries the scale p.
RatCochar fixed_point(const GroupShape &shape, const ExtAffine &wt);

/// Each block strictly decreasing with spread below 1.
bool in_alcove(const RatCochar &e);

/// No integral entry and no integral difference within a block.
bool in_general_position(const RatCochar &e);

/// m (q^{n'} - 1) / (q^n - 1) is non-integral for every proper divisor n' of n.
bool is_caruso_simple(int n, const Integer &q, const Integer &m);

/// Caruso representative u^{(m,0,...,0)} (n-cycle) embedded into the
/// first of f blocks, then reduced into the alcove.
FrobeniusDatum caruso_datum(int n, int f, int p, const Integer &m);
/// The same representative before alcove reduction, without the
/// simplicity checks.
FrobeniusDatum caruso_unreduced(int n, int f, int p, const Integer &m);

struct AlcoveReduction {
  ExtAffine z;
  FrobeniusDatum datum;
};

/// Finds z = u^chi y with z^{-1}(e) in the alcove and returns the
/// conjugated datum z^{-1} wt sigma(z). Data already in the alcove come
/// back unchanged with z = 1.
AlcoveReduction alcove_reduce(const FrobeniusDatum &datum);

/// gcd(q^a - 1, q^b - 1); throws TheoremViolation unless it equals
/// q^{gcd(a,b)} - 1.
Integer gcd_power_fact(const Integer &q, unsigned a, unsigned b);

} // namespace kisin
