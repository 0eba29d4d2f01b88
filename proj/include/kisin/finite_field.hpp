#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace kisin {

/// F_{p^r} with elements encoded as 0..q-1 (base-p digits of the
/// polynomial representative, modulo a fixed irreducible of degree r).
/// Small fields only: all operations are table lookups.
class FiniteField {
public:
  using Elem = std::uint16_t;

  FiniteField(int p, int r);

  int p() const { return p_; }
  int degree() const { return r_; }
  int size() const { return q_; }
  std::string name() const;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
  Elem sub(Elem a, Elem b) const { return add_[a * q_ + neg_[b]]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * q_ + b]; }
  Elem inv(Elem a) const; // throws on zero
  /// Image of the prime field element k mod p.
  Elem from_int(long long k) const;

  /// Coefficients of the defining polynomial x^r = sum c_i x^i.
  const std::vector<int> &modulus() const { return modulus_; }

private:
  int p_, r_, q_;
  std::vector<int> modulus_;
  std::vector<Elem> add_, mul_, neg_, inv_;
};

} // namespace kisin
