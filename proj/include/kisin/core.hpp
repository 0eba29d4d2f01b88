#pragma once

// Root datum and extended affine Weyl group arithmetic for a product of
// N copies of GL_n, with a Frobenius that shifts blocks cyclically and
// scales block k by eps[k] in {1, p}.
//
// Indices are 0-based throughout the library; the CLI and JSON layer
// translate to the 1-based convention used for permutations and roots.

#include "kisin/arith.hpp"

#include <compare>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace kisin {

class GroupShape {
public:
  GroupShape() : GroupShape(1, {2}, 2) {} // GL_1 over F_2
  GroupShape(int n, std::vector<int> eps, int p);

  /// Res_{F_q/F_p} GL_n with q = p^f: f blocks, every block scaled by p.
  static GroupShape restriction(int n, int f, int p);
  /// d copies of the restriction: N = d*f blocks, block k (0-based) is
  /// scaled by p exactly when k + 1 is divisible by d.
  static GroupShape multi_copy(int n, int f, int d, int p);

  int n() const { return n_; }
  int blocks() const { return static_cast<int>(eps_.size()); }
  int p() const { return p_; }
  int eps(int k) const { return eps_[k]; }
  const std::vector<int> &eps() const { return eps_; }
  /// Number of blocks carrying the scale p; wσ is invertible-minus-one
  /// exactly when this is positive.
  int frobenius_weight() const;

  bool operator==(const GroupShape &) const = default;

private:
  int n_;
  std::vector<int> eps_;
  int p_;
};

/// N blocks of n coordinates each, stored block-major.
template <class T> class BlockVector {
public:
  BlockVector() = default;
  BlockVector(int blocks, int n) : blocks_(blocks), n_(n), data_(std::size_t(blocks) * n) {}
  BlockVector(int blocks, int n, std::vector<T> data);
  static BlockVector from_blocks(const std::vector<std::vector<T>> &blocks);

  int blocks() const { return blocks_; }
  int n() const { return n_; }
  T &operator()(int k, int i) { return data_[std::size_t(k) * n_ + i]; }
  const T &operator()(int k, int i) const { return data_[std::size_t(k) * n_ + i]; }
  std::span<T> block(int k) { return {data_.data() + std::size_t(k) * n_, std::size_t(n_)}; }
  std::span<const T> block(int k) const {
    return {data_.data() + std::size_t(k) * n_, std::size_t(n_)};
  }
  const std::vector<T> &flat() const { return data_; }
  std::vector<std::vector<T>> to_blocks() const;

  bool same_shape(const BlockVector &other) const {
    return blocks_ == other.blocks_ && n_ == other.n_;
  }

  BlockVector &operator+=(const BlockVector &rhs);
  BlockVector &operator-=(const BlockVector &rhs);
  friend BlockVector operator+(BlockVector lhs, const BlockVector &rhs) { return lhs += rhs; }
  friend BlockVector operator-(BlockVector lhs, const BlockVector &rhs) { return lhs -= rhs; }
  friend BlockVector operator-(BlockVector v) {
    for (auto &x : v.data_)
      x = -x;
    return v;
  }
  friend bool operator==(const BlockVector &, const BlockVector &) = default;
  friend std::weak_ordering operator<=>(const BlockVector &a, const BlockVector &b) {
    if (auto c = a.blocks_ <=> b.blocks_; c != 0)
      return c;
    if (auto c = a.n_ <=> b.n_; c != 0)
      return c;
    return std::lexicographical_compare_three_way(a.data_.begin(), a.data_.end(),
                                                  b.data_.begin(), b.data_.end(),
                                                  [](const T &x, const T &y) {
                                                    return x < y   ? std::weak_ordering::less
                                                           : y < x ? std::weak_ordering::greater
                                                                   : std::weak_ordering::equivalent;
                                                  });
  }

private:
  int blocks_ = 0;
  int n_ = 0;
  std::vector<T> data_;
};

using Cochar = BlockVector<Integer>;
using RatCochar = BlockVector<Rational>;

RatCochar to_rational(const Cochar &v);
Cochar zero_cochar(const GroupShape &shape);
bool fits(const GroupShape &shape, const Cochar &v);
bool fits(const GroupShape &shape, const RatCochar &v);

/// One-line notation: perm[i] is the image of i.
using Permutation = std::vector<int>;

Permutation identity_permutation(int n);
Permutation inverse(const Permutation &perm);
Permutation compose(const Permutation &a, const Permutation &b); // a after b
bool is_permutation(const Permutation &perm);
/// Permutation from cycle notation with 1-based labels, e.g. {{1,2,4,3}}.
Permutation from_cycles(int n, const std::vector<std::vector<int>> &cycles);
/// Order of the permutation as a group element.
int order(const Permutation &perm);

class WeylElt {
public:
  WeylElt() = default;
  explicit WeylElt(std::vector<Permutation> perms);
  static WeylElt identity(int blocks, int n);

  int blocks() const { return static_cast<int>(perms_.size()); }
  int n() const { return perms_.empty() ? 0 : static_cast<int>(perms_.front().size()); }
  const Permutation &operator[](int k) const { return perms_[k]; }
  const std::vector<Permutation> &perms() const { return perms_; }
  bool is_identity() const;

  friend bool operator==(const WeylElt &, const WeylElt &) = default;

private:
  std::vector<Permutation> perms_;
};

WeylElt operator*(const WeylElt &a, const WeylElt &b);
WeylElt inverse(const WeylElt &w);
/// Cyclic block shift used by the Frobenius: result[k] = w[k+1].
WeylElt sigma0(const WeylElt &w);

/// (w.v)[k][i] = v[k][w_k^{-1}(i)], so that u^{w(v)} = w u^v w^{-1}.
template <class T> BlockVector<T> act_weyl(const WeylElt &w, const BlockVector<T> &v);
/// result[k] = eps[k] * v[k+1], indices cyclic.
template <class T> BlockVector<T> act_sigma(const GroupShape &shape, const BlockVector<T> &v);

struct DominantForm {
  Cochar value;   // each block non-increasing
  WeylElt witness; // act_weyl(witness, input) == value
};
DominantForm dominant(const Cochar &v);
bool is_dominant(const Cochar &v);
/// Every block of the form (a+1, ..., a+1, a, ..., a).
bool is_minuscule(const Cochar &v);
/// Every block constant.
bool is_central(const Cochar &v);

/// Blockwise dominance with equal block sums; this is the Bruhat order on
/// dominant cocharacters of a product of GL_n. Throws on non-dominant input.
bool dominance_leq(const Cochar &nu, const Cochar &mu);

/// alpha_{i,j} = e_i - e_j inside one block; positive iff i < j.
struct Root {
  int block = 0;
  int i = 0;
  int j = 0;

  bool positive() const { return i < j; }
  Root negated() const { return {block, j, i}; }
  friend auto operator<=>(const Root &, const Root &) = default;
};

std::vector<Root> all_roots(const GroupShape &shape);
Cochar coroot(const GroupShape &shape, const Root &alpha);
Integer pairing(const Cochar &v, const Root &alpha);
/// <lam, alpha> for negative alpha, <lam, alpha> - 1 for positive alpha.
Integer lambda_alpha(const Cochar &lam, const Root &alpha);

/// u^chi y, acting on Y_R by v -> chi + y(v).
struct ExtAffine {
  Cochar chi;
  WeylElt y;

  static ExtAffine identity(const GroupShape &shape);
  bool is_identity() const;
  friend bool operator==(const ExtAffine &, const ExtAffine &) = default;
};

ExtAffine ext_mul(const ExtAffine &a, const ExtAffine &b);
ExtAffine ext_inv(const ExtAffine &a);
/// sigma(u^chi y) = u^{sigma(chi)} sigma0(y).
ExtAffine ext_sigma(const GroupShape &shape, const ExtAffine &z);
/// z^{-1} wt sigma(z).
ExtAffine ext_sigma_conj(const GroupShape &shape, const ExtAffine &z, const ExtAffine &wt);
RatCochar ext_apply(const ExtAffine &z, const RatCochar &v);

std::string to_string(const Cochar &v);
std::string to_string(const RatCochar &v);
std::string to_string(const Root &alpha); // 1-based "alpha[k](i,j)"

// ---------------------------------------------------------------------------

template <class T>
BlockVector<T>::BlockVector(int blocks, int n, std::vector<T> data)
    : blocks_(blocks), n_(n), data_(std::move(data)) {
  if (data_.size() != std::size_t(blocks) * n)
    throw InvalidInput("block vector data has wrong length");
}

template <class T>
BlockVector<T> BlockVector<T>::from_blocks(const std::vector<std::vector<T>> &blocks) {
  if (blocks.empty())
    throw InvalidInput("block vector needs at least one block");
  int n = static_cast<int>(blocks.front().size());
  std::vector<T> data;
  for (const auto &b : blocks) {
    if (static_cast<int>(b.size()) != n)
      throw InvalidInput("blocks of unequal length");
    data.insert(data.end(), b.begin(), b.end());
  }
  return BlockVector(static_cast<int>(blocks.size()), n, std::move(data));
}

template <class T> std::vector<std::vector<T>> BlockVector<T>::to_blocks() const {
  std::vector<std::vector<T>> out;
  for (int k = 0; k < blocks_; ++k)
    out.emplace_back(block(k).begin(), block(k).end());
  return out;
}

template <class T> BlockVector<T> &BlockVector<T>::operator+=(const BlockVector &rhs) {
  if (!same_shape(rhs))
    throw InvalidInput("shape mismatch in addition");
  for (std::size_t i = 0; i < data_.size(); ++i)
    data_[i] += rhs.data_[i];
  return *this;
}

template <class T> BlockVector<T> &BlockVector<T>::operator-=(const BlockVector &rhs) {
  if (!same_shape(rhs))
    throw InvalidInput("shape mismatch in subtraction");
  for (std::size_t i = 0; i < data_.size(); ++i)
    data_[i] -= rhs.data_[i];
  return *this;
}

template <class T> BlockVector<T> act_weyl(const WeylElt &w, const BlockVector<T> &v) {
  if (w.blocks() != v.blocks() || w.n() != v.n())
    throw InvalidInput("shape mismatch in Weyl action");
  BlockVector<T> out(v.blocks(), v.n());
  for (int k = 0; k < v.blocks(); ++k)
    for (int j = 0; j < v.n(); ++j)
      out(k, w[k][j]) = v(k, j);
  return out;
}

template <class T>
BlockVector<T> act_sigma(const GroupShape &shape, const BlockVector<T> &v) {
  if (v.blocks() != shape.blocks() || v.n() != shape.n())
    throw InvalidInput("shape mismatch in Frobenius action");
  const int N = v.blocks();
  BlockVector<T> out(N, v.n());
  for (int k = 0; k < N; ++k) {
    int next = (k + 1) % N;
    for (int i = 0; i < v.n(); ++i)
      out(k, i) = v(next, i) * shape.eps(k);
  }
  return out;
}

} // namespace kisin
