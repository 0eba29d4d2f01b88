#include "kisin/strata.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

namespace kisin {

namespace {

void require_alcove(const FrobeniusDatum &datum) {
  if (!datum.alcove_ok)
    throw PreconditionError("fixed point of the datum is not in the fundamental alcove");
}

void require_mu(const FrobeniusDatum &datum, const Cochar &mu) {
  if (!fits(datum.shape, mu))
    throw InvalidInput("mu does not match the group shape");
  if (!is_dominant(mu))
    throw InvalidInput("mu must be dominant");
}

long long to_ll(const Integer &z) {
  if (z > std::numeric_limits<long long>::max() / 4 || z < std::numeric_limits<long long>::min() / 4)
    throw PreconditionError("cocharacter entry too large to enumerate");
  return z.convert_to<long long>();
}

void dominant_below(const std::vector<long long> &mu, std::vector<long long> &cur,
                    long long partial, long long partial_mu,
                    std::vector<std::vector<long long>> &out) {
  const std::size_t i = cur.size(), n = mu.size();
  if (i == n) {
    if (partial == partial_mu)
      out.push_back(cur);
    return;
  }
  const long long lo = mu.back();
  const long long total = [&] {
    long long s = 0;
    for (long long x : mu)
      s += x;
    return s;
  }();
  const long long hi = i == 0 ? mu.front() : cur.back();
  const long long remaining = static_cast<long long>(n - i - 1);
  for (long long v = hi; v >= lo; --v) {
    long long ps = partial + v;
    if (ps > partial_mu + mu[i])
      continue;
    long long need = total - ps;
    if (need < remaining * lo || need > remaining * v)
      continue;
    cur.push_back(v);
    dominant_below(mu, cur, ps, partial_mu + mu[i], out);
    cur.pop_back();
  }
}

} // namespace

Cochar natural_lambda(const FrobeniusDatum &datum, const Cochar &lam) {
  if (!fits(datum.shape, lam))
    throw InvalidInput("lambda does not match the group shape");
  return dagger_lambda(datum, lam) - lam;
}

Cochar dagger_lambda(const FrobeniusDatum &datum, const Cochar &lam) {
  if (!fits(datum.shape, lam))
    throw InvalidInput("lambda does not match the group shape");
  return datum.tau() + act_weyl(datum.w(), act_sigma(datum.shape, lam));
}

bool stratum_nonempty(const FrobeniusDatum &datum, const Cochar &mu, const Cochar &lam) {
  require_alcove(datum);
  require_mu(datum, mu);
  return dominance_leq(dominant(natural_lambda(datum, lam)).value, mu);
}

std::uint64_t max_enumeration() {
  if (const char *env = std::getenv("KISIN_MAX_ENUM")) {
    char *end = nullptr;
    unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0)
      return value;
    throw InvalidInput("KISIN_MAX_ENUM must be a positive integer");
  }
  return 10'000'000ULL;
}

std::vector<std::vector<Integer>> dominated_block(std::span<const Integer> mu_block) {
  std::vector<long long> mu;
  for (const auto &x : mu_block)
    mu.push_back(to_ll(x));
  if (!std::is_sorted(mu.rbegin(), mu.rend()))
    throw InvalidInput("mu block must be non-increasing");
  std::vector<std::vector<long long>> dominants;
  std::vector<long long> cur;
  dominant_below(mu, cur, 0, 0, dominants);

  std::vector<std::vector<Integer>> out;
  for (auto v : dominants) {
    std::sort(v.begin(), v.end());
    do {
      out.emplace_back(v.begin(), v.end());
    } while (std::next_permutation(v.begin(), v.end()));
  }
  return out;
}

std::vector<Cochar> enumerate_lambdas(const FrobeniusDatum &datum, const Cochar &mu,
                                      std::uint64_t cap) {
  require_alcove(datum);
  require_mu(datum, mu);
  const int N = datum.shape.blocks(), n = datum.shape.n();

  std::vector<std::vector<std::vector<Integer>>> candidates;
  long double count = 1;
  for (int k = 0; k < N; ++k) {
    candidates.push_back(dominated_block(mu.block(k)));
    count *= static_cast<long double>(candidates.back().size());
    if (count > static_cast<long double>(cap))
      throw PreconditionError("candidate enumeration exceeds the cap of " + std::to_string(cap) +
                              " (KISIN_MAX_ENUM)");
  }

  TwistedPermutation solver(datum.shape, datum.w());
  std::vector<Cochar> lambdas;
  std::vector<std::size_t> odometer(N, 0);
  Cochar rhs(N, n);
  while (true) {
    for (int k = 0; k < N; ++k) {
      const auto &nu = candidates[k][odometer[k]];
      for (int i = 0; i < n; ++i)
        rhs(k, i) = datum.tau()(k, i) - nu[i];
    }
    if (auto lam = solver.solve_integral(rhs))
      lambdas.push_back(std::move(*lam));

    int k = 0;
    while (k < N && ++odometer[k] == candidates[k].size()) {
      odometer[k] = 0;
      ++k;
    }
    if (k == N)
      break;
  }
  std::sort(lambdas.begin(), lambdas.end());
  return lambdas;
}

std::vector<Stratum> enumerate_strata(const FrobeniusDatum &datum, const Cochar &mu,
                                      std::uint64_t cap) {
  std::vector<Stratum> out;
  for (const auto &lam : enumerate_lambdas(datum, mu, cap))
    out.push_back(make_stratum(datum, mu, lam));
  return out;
}

std::vector<Stratum> enumerate_strata(const FrobeniusDatum &datum, const Cochar &mu) {
  return enumerate_strata(datum, mu, max_enumeration());
}

Stratum make_stratum(const FrobeniusDatum &datum, const Cochar &mu, const Cochar &lam) {
  Stratum s;
  s.lam = lam;
  s.dag = dagger_lambda(datum, lam);
  s.nat = s.dag - lam;
  if (is_minuscule(mu)) {
    s.r_set = r_set(datum, mu, lam);
    s.dim = static_cast<int>(s.r_set->size());
  }
  s.d_set = d_set(datum, mu, lam);
  s.singleton = singleton_sufficient(datum, mu, lam);
  return s;
}

std::vector<Root> r_set(const FrobeniusDatum &datum, const Cochar &mu, const Cochar &lam) {
  if (!is_minuscule(mu))
    throw PreconditionError("dimension formula unavailable: mu is not minuscule");
  if (!stratum_nonempty(datum, mu, lam))
    throw PreconditionError("lambda is not in S");
  Cochar nat = natural_lambda(datum, lam);
  std::vector<Root> out;
  for (const auto &alpha : all_roots(datum.shape))
    if (lambda_alpha(lam, alpha) >= 1 && pairing(nat, alpha) == -1)
      out.push_back(alpha);
  return out;
}

std::vector<Root> d_set(const FrobeniusDatum &datum, const Cochar &mu, const Cochar &lam) {
  if (!stratum_nonempty(datum, mu, lam))
    throw PreconditionError("lambda is not in S");
  Cochar nat = natural_lambda(datum, lam);
  std::vector<Root> out;
  for (const auto &alpha : all_roots(datum.shape))
    if (lambda_alpha(lam, alpha) >= 0 && pairing(nat, alpha) <= -1)
      out.push_back(alpha);
  return out;
}

SingletonCertificate singleton_sufficient(const FrobeniusDatum &datum, const Cochar &mu,
                                          const Cochar &lam) {
  auto d = d_set(datum, mu, lam); // validates lambda in S
  SingletonCertificate cert;
  if (is_central(lam))
    cert.reasons |= reason_central;
  if (is_dominant(lam) && is_minuscule(lam))
    cert.reasons |= reason_dominant_minuscule;
  if (dominant(natural_lambda(datum, lam)).value == mu &&
      std::all_of(d.begin(), d.end(), [&](const Root &a) { return lambda_alpha(lam, a) == 0; }))
    cert.reasons |= reason_d_set;
  if (is_minuscule(mu) && r_set(datum, mu, lam).empty())
    cert.reasons |= reason_zero_dimensional;
  cert.verdict = cert.reasons ? Singleton::proven : Singleton::unknown;
  return cert;
}

TwistedInstance central_twist(const FrobeniusDatum &datum, const Cochar &mu, const Cochar &chi) {
  if (!fits(datum.shape, chi) || !fits(datum.shape, mu))
    throw InvalidInput("shape mismatch in central twist");
  if (!is_central(chi))
    throw InvalidInput("twisting cocharacter must be central");
  FrobeniusDatum twisted = make_datum(datum.shape, datum.tau() + chi, datum.w());
  return {std::move(twisted), mu + chi};
}

bool is_omega1_shaped(const Cochar &mu) {
  for (int k = 0; k < mu.blocks(); ++k)
    for (int i = 2; i < mu.n(); ++i)
      if (mu(k, i) != mu(k, 1))
        return false;
  return is_dominant(mu);
}

Cochar omega1_twist(const Cochar &mu) {
  if (!is_omega1_shaped(mu))
    throw InvalidInput("mu is not of the form (a, b, ..., b) with a >= b on every block");
  Cochar chi(mu.blocks(), mu.n());
  for (int k = 0; k < mu.blocks(); ++k) {
    Integer base = mu.n() >= 2 ? mu(k, 1) : Integer(0);
    for (int i = 0; i < mu.n(); ++i)
      chi(k, i) = -base;
  }
  return chi;
}

std::vector<Integer> sum_profile(const Cochar &lam) {
  std::vector<Integer> out;
  for (int k = 0; k < lam.blocks(); ++k) {
    Integer s = 0;
    for (const auto &x : lam.block(k))
      s += x;
    out.push_back(s);
  }
  return out;
}

} // namespace kisin
