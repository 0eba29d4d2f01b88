#pragma once

// Semi-module strata of C_mu(b): the set S of lambda with
// dominant(lambda^nat) <= mu, where lambda^nat = -lambda + tau + w sigma(lambda),
// together with dimensions (minuscule mu) and singleton certificates.

#include "kisin/normal_form.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace kisin {

enum class Singleton { proven, unknown };

/// Sufficient conditions for C_mu^lambda(b) = {u^lambda}.
enum SingletonReason : unsigned {
  reason_central = 1u << 0,         // lambda constant on every block
  reason_dominant_minuscule = 1u << 1,
  reason_d_set = 1u << 2,           // lambda^nat conjugate to mu, lambda_alpha = 0 on D(lambda)
  reason_zero_dimensional = 1u << 3 // mu minuscule and R(lambda) empty
};

struct SingletonCertificate {
  Singleton verdict = Singleton::unknown;
  unsigned reasons = 0;
};

struct Stratum {
  Cochar lam;
  Cochar nat; // lambda^nat
  Cochar dag; // lambda^dagger = tau + w sigma(lambda)
  std::optional<std::vector<Root>> r_set; // only for minuscule mu
  std::vector<Root> d_set;
  std::optional<int> dim; // |R(lambda)| when mu is minuscule
  SingletonCertificate singleton;
};

Cochar natural_lambda(const FrobeniusDatum &datum, const Cochar &lam);
Cochar dagger_lambda(const FrobeniusDatum &datum, const Cochar &lam);

bool stratum_nonempty(const FrobeniusDatum &datum, const Cochar &mu, const Cochar &lam);

/// Default cap on candidate lambda^nat values; overridden by the
/// KISIN_MAX_ENUM environment variable.
std::uint64_t max_enumeration();

/// All lambda in S, sorted lexicographically. Each candidate value nu of
/// lambda^nat with dominant(nu) <= mu is inverted through 1 - w.sigma and
/// kept when the preimage is integral; nu -> lambda is injective, so the
/// output has no duplicates.
std::vector<Stratum> enumerate_strata(const FrobeniusDatum &datum, const Cochar &mu);
std::vector<Stratum> enumerate_strata(const FrobeniusDatum &datum, const Cochar &mu,
                                      std::uint64_t cap);

/// Only the lambda values; skips the per-stratum certificates.
std::vector<Cochar> enumerate_lambdas(const FrobeniusDatum &datum, const Cochar &mu,
                                      std::uint64_t cap);

/// Every integer vector whose dominant form is <= the given dominant block.
std::vector<std::vector<Integer>> dominated_block(std::span<const Integer> mu_block);

Stratum make_stratum(const FrobeniusDatum &datum, const Cochar &mu, const Cochar &lam);

std::vector<Root> r_set(const FrobeniusDatum &datum, const Cochar &mu, const Cochar &lam);
std::vector<Root> d_set(const FrobeniusDatum &datum, const Cochar &mu, const Cochar &lam);
SingletonCertificate singleton_sufficient(const FrobeniusDatum &datum, const Cochar &mu,
                                          const Cochar &lam);

struct TwistedInstance {
  FrobeniusDatum datum;
  Cochar mu;
};

/// C_mu(b) = C_{mu+chi}(u^chi b) for central chi.
TwistedInstance central_twist(const FrobeniusDatum &datum, const Cochar &mu, const Cochar &chi);

/// For mu with mu_{k,1} >= mu_{k,2} = ... = mu_{k,n}, the central chi that
/// brings mu to (m_1 w1, ..., m_N w1).
Cochar omega1_twist(const Cochar &mu);
bool is_omega1_shaped(const Cochar &mu); // mu_{k,2} = ... = mu_{k,n} <= mu_{k,1}

std::vector<Integer> sum_profile(const Cochar &lam);

} // namespace kisin
