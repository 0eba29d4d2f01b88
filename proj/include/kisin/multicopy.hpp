#pragma once

// The d-copy construction: G^d with Frobenius (g_1,...,g_d) -> (g_2,...,g_d,
// sigma(g_1)) and b. = (1,...,1,b), flattened to N = d*f blocks via
// block (copy i, factor j) = i + (j-1) d (1-based). Everything downstream
// reuses the single-group machinery on that flattened shape.

#include "kisin/strata.hpp"

#include <optional>

namespace kisin {

/// 0-based flattened block index of (copy, factor), both 0-based.
inline int interleave_index(int d, int copy, int factor) { return copy + factor * d; }

struct MultiDatum {
  FrobeniusDatum base;
  int d = 1;
  FrobeniusDatum lifted;
};

MultiDatum lift(const FrobeniusDatum &base, int d);

/// (v_1, ..., v_d) with each v_i an f-block vector, flattened.
RatCochar interleave(const std::vector<RatCochar> &copies);
Cochar interleave(const std::vector<Cochar> &copies);

/// mu = (m_1 w1, ..., m_f w1) with 0 <= m_j <= d, split so that copy i of
/// factor j is w1 exactly when i < m_j.
Cochar decompose_mu(const Cochar &mu, int d);

struct DescentStats {
  Rational delta; // <v> - n min[v]
  Integer h;      // sum floor(v(i) - min[v])
};
DescentStats descent_stats(const std::vector<Rational> &v);
/// Subtract 1 from every maximal entry.
std::vector<Rational> varsigma(const std::vector<Rational> &v);

/// The unique lambda. with |R(lambda.)| = 0. Throws PreconditionError when
/// S. is empty and TheoremViolation when zero or several strata qualify.
Stratum unique_zero_stratum(const MultiDatum &multi, const Cochar &mu_bullet);

struct RecursionCheck {
  bool ok = false;
  int failing_block = -1;          // first block violating the recursion
  std::optional<int> zero_height_block; // some k0 with h(hat-lambda^{k0}) = 0
};

/// With hat-lambda = lambda. - e., checks
///   hat^k = eps^k w^k(hat^{k+1})          when m^k = 0,
///   hat^k = varsigma(eps^k w^k(hat^{k+1})) when m^k = 1,
/// on every block, and that some block has h = 0.
RecursionCheck recursion_check(const MultiDatum &multi, const Cochar &mu_bullet,
                               const Cochar &lam_bullet);

/// The copy-1 blocks of lambda..
Cochar project_first(const MultiDatum &multi, const Cochar &lam_bullet);

/// Everything needed to certify connectedness of C_mu(b) for mu of
/// omega1-shape: central twist, d-copy lift, the zero-dimensional stratum,
/// its recursion check, and coverage of S(mu) by the first projection.
struct OmegaOneAnalysis {
  Cochar chi;          // central twist applied
  Cochar mu_twisted;   // (m_1 w1, ..., m_f w1)
  int d = 1;
  MultiDatum multi;
  Cochar mu_bullet;
  std::vector<Cochar> strata_bullet;
  std::optional<Stratum> zero_stratum; // empty exactly when S. is empty
  std::optional<RecursionCheck> recursion;
  std::vector<Cochar> strata;   // S(mu) of the original instance
  bool projection_covers = false;
};

OmegaOneAnalysis analyze_omega1(const FrobeniusDatum &datum, const Cochar &mu,
                                std::optional<int> d = std::nullopt);

} // namespace kisin
