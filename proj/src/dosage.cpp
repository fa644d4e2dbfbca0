#include "mcdd/dosage.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "mcdd/diffusion.hpp"
#include "mcdd/queue.hpp"

namespace mcdd {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double occupancy_factor(double C, double Kplus, double mu, double gamma) {
  if (C < 0 || Kplus < 0 || mu < 0 || gamma < 0)
    throw std::domain_error("occupancy_factor: inputs must be nonnegative");
  const double denom = Kplus * C + mu + gamma;
  if (denom == 0) throw std::domain_error("occupancy_factor: zero denominator");
  return Kplus * C / denom;
}

double min_effective_concentration(double f, double Kplus, double mu,
                                   double gamma) {
  if (!(f > 0)) throw std::domain_error("min_effective_concentration: f must be positive");
  if (!(f < 1))
    throw std::domain_error("min_effective_concentration: f must lie strictly below 1");
  if (!(Kplus > 0))
    throw std::domain_error("min_effective_concentration: Kplus must be positive");
  return f * (mu + gamma) / (Kplus * (1.0 - f));
}

double feasibility_boundary(double Kplus) {
  if (!(Kplus > 0))
    throw std::domain_error("feasibility_boundary: Kplus must be positive");
  return Kplus / (1.0 + Kplus);
}

double q_min_rate(const SystemParams& p) {
  validate(p);
  const double f_star = feasibility_boundary(p.Kplus);
  const double one_mf = 1.0 - p.f;
  const double denom = p.Kplus * one_mf * one_mf - p.f * p.f / p.Kplus;
  if (p.f >= f_star || denom <= 0)
    throw std::domain_error(
        "q_min_rate: infeasible occupancy factor f=" + std::to_string(p.f) +
        " (requires f < f_star = K+/(1+K+) = " + std::to_string(f_star) + ")");
  return 4.0 * kPi * p.D * p.R * p.mu * p.f * one_mf / denom;
}

double q_min_rate_no_rejection(const SystemParams& p) {
  validate(p);
  return 4.0 * kPi * p.D * p.R * p.mu * p.f / (p.Kplus * (1.0 - p.f));
}

double q_max_rate(const SystemParams& p) {
  validate(p);
  const double Nm = static_cast<double>(capacity(p));
  return 4.0 * kPi * p.D * p.R * Nm;
}

DoseBounds dose_interval(const SystemParams& p) {
  validate(p);
  DoseBounds b{};
  b.f_star = feasibility_boundary(p.Kplus);
  b.feasible = p.f < b.f_star;
  b.q_max_rate = q_max_rate(p);
  b.q_max = b.q_max_rate * p.dt;
  if (b.feasible) {
    b.q_min_rate = q_min_rate(p);
    b.q_min = b.q_min_rate * p.dt;
    b.interval_empty = b.q_min > b.q_max;
    if (p.Q < b.q_min)
      b.verdict = DoseVerdict::below;
    else if (p.Q > b.q_max)
      b.verdict = DoseVerdict::above;
    else
      b.verdict = DoseVerdict::within;
  } else {
    b.q_min_rate = std::numeric_limits<double>::quiet_NaN();
    b.q_min = b.q_min_rate;
    b.interval_empty = false;
    b.verdict = DoseVerdict::indeterminate;
  }
  return b;
}

}  // namespace mcdd
