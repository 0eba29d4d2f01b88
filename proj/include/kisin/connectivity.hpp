#pragma once

// Coroot-curve adjacency between the points u^lambda, lambda in S, and the
// resulting bound on the number of connected components of C_mu(b).

#include "kisin/strata.hpp"

#include <optional>
#include <vector>

namespace kisin {

/// The curve g(x) = u^lambda U_alpha(u^{-1} x) joins u^lambda to
/// u^{lambda - alpha^vee} inside C_mu(b) when
///   lambda^nat + alpha^vee,  lambda^nat - w sigma(alpha^vee)  and
///   lambda'^nat = lambda^nat + alpha^vee - w sigma(alpha^vee)
/// are all dominated by mu.
bool edge_exists(const FrobeniusDatum &datum, const Cochar &mu, const Cochar &lam,
                 const Root &alpha);

struct Edge {
  int from = 0; // vertex indices
  int to = 0;
  Root alpha;   // vertices[to].lam = vertices[from].lam - alpha^vee
};

struct StrataGraph {
  std::vector<Stratum> vertices;
  std::vector<Edge> edges;
  std::vector<std::vector<int>> components; // sorted, ordered by first vertex
};

StrataGraph build_graph(const FrobeniusDatum &datum, const Cochar &mu);

enum class Pi0Status { exact, upper_bound, empty };

struct Pi0Report {
  int value = 0; // number of graph components
  Pi0Status status = Pi0Status::empty;
};

/// Exact when every stratum is a proven singleton (then C_mu(b) is the
/// finite set of points u^lambda); otherwise only an upper bound. An upper
/// bound of 1 still certifies connectedness.
Pi0Report pi0_report(const StrataGraph &graph);

struct ChainStep {
  Cochar lam;
  std::optional<Root> alpha; // lam - previous lam = alpha^vee; absent on the first entry
};

/// A chain lambda = lambda_0, ..., lambda_r = lambda' inside S with coroot
/// steps, for GL_3 over a totally ramified field (one block, w a 3-cycle).
/// Throws TheoremViolation if the inductive construction ever leaves S.
std::vector<ChainStep> chain_gl3(const FrobeniusDatum &datum, const Cochar &mu, const Cochar &lam,
                                 const Cochar &lam_prime);

/// Coefficients (n1, n2) with delta = n1 alpha^vee + n2 w(alpha^vee) and
/// n1 = max(|n1|, |n2|, |n1 - n2|), over the six roots of GL_3.
struct Gl3Decomposition {
  Root alpha;
  Integer n1;
  Integer n2;
};
Gl3Decomposition normalize_gl3(const FrobeniusDatum &datum, const Cochar &delta);

} // namespace kisin
