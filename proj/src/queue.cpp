#include "mcdd/queue.hpp"

#include <cmath>
#include <stdexcept>

#include "mcdd/diffusion.hpp"

namespace mcdd {

double rejection_rate(double lambda, double mu) {
  if (lambda < 0 || mu < 0)
    throw std::domain_error("rejection_rate: rates must be nonnegative");
  if (lambda == 0) return 0.0;
  // 2*lambda^2 / (sqrt(mu^2+4*lambda^2) + mu) avoids cancellation when
  // mu >> lambda; algebraically equal to (sqrt(mu^2+4*lambda^2) - mu) / 2.
  return 2.0 * lambda * lambda /
         (std::sqrt(mu * mu + 4.0 * lambda * lambda) + mu);
}

double rejection_probability(double lambda, double mu, double gamma) {
  if (lambda < 0 || mu < 0 || gamma < 0)
    throw std::domain_error("rejection_probability: rates must be nonnegative");
  const double denom = mu + gamma + lambda;
  if (denom == 0)
    throw std::domain_error("rejection_probability: all rates are zero");
  return (gamma + lambda) / denom;
}

double p0_single(double lambda, double mu, double gamma) {
  if (lambda < 0 || mu < 0 || gamma < 0)
    throw std::domain_error("p0_single: rates must be nonnegative");
  const double denom = mu + gamma + lambda;
  if (denom == 0) throw std::domain_error("p0_single: all rates are zero");
  return (mu + gamma) / denom;
}

double gamma_prime(double lambda, double mu) {
  if (lambda < 0 || mu < 0)
    throw std::domain_error("gamma_prime: rates must be nonnegative");
  const double denom = mu + lambda;
  if (denom == 0) throw std::domain_error("gamma_prime: mu + lambda is zero");
  return lambda * lambda / denom;
}

std::pair<double, double> split_gamma(double gamma, double alpha) {
  if (!(alpha >= 0 && alpha <= 1))
    throw std::domain_error("split_gamma: alpha must lie in [0, 1]");
  const double a = alpha * gamma;
  return {a, gamma - a};  // the parts sum to gamma exactly
}

namespace {
// sum_{k=0}^{i} (i-k) = i(i+1)/2, exact in double for i up to ~9.4e7.
double triangular(std::int64_t i) {
  return 0.5 * static_cast<double>(i) * static_cast<double>(i + 1);
}
}  // namespace

std::pair<double, double> state_rates(std::int64_t i, std::int64_t Nr,
                                      double mu, double gamma) {
  if (Nr < 1) throw std::domain_error("state_rates: Nr must be at least 1");
  if (i < 1) throw std::domain_error("state_rates: state index must be >= 1");
  double mu_i, gamma_i;
  if (i <= Nr) {
    mu_i = mu * triangular(i);
    gamma_i = gamma * triangular(i);
  } else {
    mu_i = mu * triangular(Nr);
    // sum_{k=0}^{Nr} (i-k) = (Nr+1)*i - Nr(Nr+1)/2
    gamma_i = gamma * (static_cast<double>(Nr + 1) * static_cast<double>(i) -
                       triangular(Nr));
  }
  return {mu_i, gamma_i};
}

double ChainSpec::mu_i(std::int64_t i) const {
  return state_rates(i, Nr, mu, gamma).first;
}

double ChainSpec::gamma_i(std::int64_t i) const {
  return state_rates(i, Nr, mu, gamma).second;
}

double ChainSpec::death_rate(std::int64_t i) const {
  auto [m, g] = state_rates(i, Nr, mu, gamma);
  return m + g;
}

ChainSpec make_chain(double lambda, double mu, double gamma, std::int64_t Nr,
                     std::int64_t Nm) {
  if (Nm < 1) throw std::invalid_argument("make_chain: Nm must be at least 1");
  if (Nr < 1) throw std::invalid_argument("make_chain: Nr must be at least 1");
  if (lambda < 0 || mu < 0 || gamma < 0)
    throw std::invalid_argument("make_chain: rates must be nonnegative");
  if (mu == 0 && gamma == 0)
    throw std::invalid_argument(
        "make_chain: mu and gamma are both zero (absorbing chain)");
  return ChainSpec{Nm, Nr, lambda, mu, gamma};
}

ChainSpec build_chain(const SystemParams& params, std::int64_t max_states) {
  validate(params);
  const std::int64_t Nm = capacity(params);
  if (Nm + 1 > max_states)
    throw std::invalid_argument(
        "build_chain: chain with " + std::to_string(Nm + 1) +
        " states exceeds the limit of " + std::to_string(max_states));
  const double lambda = enter_rate(params);
  const double gamma = rejection_rate(lambda, params.mu);
  return make_chain(lambda, params.mu, gamma, params.Nr, Nm);
}

RateSet derive_rates(const SystemParams& params) {
  validate(params);
  RateSet r{};
  r.lambda = enter_rate(params);
  r.mu = params.mu;
  r.gamma = rejection_rate(r.lambda, r.mu);
  r.gamma_prime = gamma_prime(r.lambda, r.mu);
  auto [a, b] = split_gamma(r.gamma, params.alpha);
  r.gamma_a = a;
  r.gamma_b = b;
  r.Nm = capacity(params);
  return r;
}

SteadyState steady_state(const ChainSpec& chain) {
  const std::int64_t n_states = chain.Nm + 1;
  SteadyState out;
  out.probs.assign(static_cast<std::size_t>(n_states), 0.0);

  if (chain.lambda == 0) {
    out.probs[0] = 1.0;
    out.blocking = (chain.Nm == 0) ? 1.0 : 0.0;
    out.unbind_throughput = 0.0;
    out.reject_throughput = 0.0;
    return out;
  }

  // Log of the unnormalized product-form weights, with the running maximum
  // tracked so exp never overflows for Nm ~ 1e6.
  const double log_lambda = std::log(chain.lambda);
  std::vector<double> logw(static_cast<std::size_t>(n_states));
  logw[0] = 0.0;
  double max_logw = 0.0;
  for (std::int64_t i = 1; i < n_states; ++i) {
    const double d = chain.death_rate(i);
    if (!(d > 0))
      throw std::runtime_error("steady_state: nonpositive death rate at state " +
                               std::to_string(i));
    logw[static_cast<std::size_t>(i)] =
        logw[static_cast<std::size_t>(i - 1)] + log_lambda - std::log(d);
    max_logw = std::max(max_logw, logw[static_cast<std::size_t>(i)]);
  }

  // Normalize with compensated (Kahan) summation.
  double sum = 0.0, comp = 0.0;
  for (std::int64_t i = 0; i < n_states; ++i) {
    const double w = std::exp(logw[static_cast<std::size_t>(i)] - max_logw);
    out.probs[static_cast<std::size_t>(i)] = w;
    const double y = w - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  if (!std::isfinite(sum) || sum <= 0)
    throw std::runtime_error("steady_state: normalization failed (sum not finite)");

  double thr_mu = 0.0, thr_gamma = 0.0;
  for (std::int64_t i = 0; i < n_states; ++i) {
    out.probs[static_cast<std::size_t>(i)] /= sum;
    if (i >= 1) {
      const double p = out.probs[static_cast<std::size_t>(i)];
      if (p > 0) {
        auto [m, g] = state_rates(i, chain.Nr, chain.mu, chain.gamma);
        thr_mu += m * p;
        thr_gamma += g * p;
      }
    }
  }
  out.blocking = out.probs.back();
  out.unbind_throughput = thr_mu;
  out.reject_throughput = thr_gamma;
  return out;
}

}  // namespace mcdd
