#ifndef MCDD_QUEUE_HPP
#define MCDD_QUEUE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "mcdd/params.hpp"

namespace mcdd {

/// Derived per-configuration rates.
struct RateSet {
  double lambda;       ///< enter rate (1/s)
  double mu;           ///< unbinding rate (1/s)
  double gamma;        ///< rejection rate (1/s)
  double gamma_prime;  ///< active-receptor-only comparison rate (1/s)
  double gamma_a;      ///< alpha * gamma
  double gamma_b;      ///< (1 - alpha) * gamma
  std::int64_t Nm;     ///< reception-space capacity
};

/// Nonnegative root of gamma^2 + mu*gamma - lambda^2 = 0, computed in the
/// cancellation-free form 2*lambda^2 / (sqrt(mu^2 + 4 lambda^2) + mu).
double rejection_rate(double lambda, double mu);

/// P_rej = (gamma + lambda) / (mu + gamma + lambda).
double rejection_probability(double lambda, double mu, double gamma);

/// Single-receptor, capacity-one idle probability (mu+gamma)/(mu+gamma+lambda).
double p0_single(double lambda, double mu, double gamma);

/// Comparison rate gamma' = lambda^2 / (mu + lambda); rejection attributed to
/// active receptors only. Always <= rejection_rate(lambda, mu).
double gamma_prime(double lambda, double mu);

/// (gamma_a, gamma_b) = (alpha*gamma, (1-alpha)*gamma); the parts sum to
/// gamma exactly.
std::pair<double, double> split_gamma(double gamma, double alpha);

/// State-dependent death-rate components (mu_i, gamma_i) for state i,
/// evaluated in closed form:
///   mu_i    = mu * i(i+1)/2                    for i <= Nr,
///             mu * Nr(Nr+1)/2                  for i >  Nr (plateau);
///   gamma_i = gamma * i(i+1)/2                 for i <= Nr,
///             gamma * ((Nr+1) i - Nr(Nr+1)/2)  for i >  Nr.
std::pair<double, double> state_rates(std::int64_t i, std::int64_t Nr,
                                      double mu, double gamma);

/// Finite birth-death chain with states 0..Nm, constant birth rate and
/// per-state death rates computed on demand. Immutable; safe to read
/// concurrently.
struct ChainSpec {
  std::int64_t Nm;
  std::int64_t Nr;
  double lambda;
  double mu;
  double gamma;

  double mu_i(std::int64_t i) const;
  double gamma_i(std::int64_t i) const;
  double death_rate(std::int64_t i) const;  ///< mu_i + gamma_i
};

/// Build a chain directly from the base rates. Throws when mu and gamma are
/// both zero (absorbing chain) or the bounds are invalid.
ChainSpec make_chain(double lambda, double mu, double gamma, std::int64_t Nr,
                     std::int64_t Nm);

/// Build the chain implied by the system parameters: lambda from the
/// diffusion channel, gamma from rejection_rate, capacity from the radii.
/// Chains with more than max_states states are rejected.
ChainSpec build_chain(const SystemParams& params,
                      std::int64_t max_states = 10'000'000);

/// Full rate set for a configuration.
RateSet derive_rates(const SystemParams& params);

/// Stationary distribution and derived throughputs.
struct SteadyState {
  std::vector<double> probs;  ///< P_0 .. P_Nm
  double blocking;            ///< P_Nm
  double unbind_throughput;   ///< sum mu_i P_i
  double reject_throughput;   ///< sum gamma_i P_i
};

/// Product-form stationary distribution of the chain, computed in log space
/// with a running-maximum shift so capacities ~1e6 do not overflow.
SteadyState steady_state(const ChainSpec& chain);

}  // namespace mcdd

#endif
