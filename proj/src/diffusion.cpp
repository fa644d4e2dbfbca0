#include "mcdd/diffusion.hpp"

#include <cmath>
#include <stdexcept>

namespace mcdd {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kInvSqrtPi = 0.56418958354775628695;  // 1/sqrt(pi)

// erf via its Maclaurin series; converges quickly for |x| <= 2.5.
double erf_series(double x) {
  double term = x;
  double sum = x;
  const double x2 = x * x;
  for (int n = 1; n < 120; ++n) {
    term *= -x2 / n;
    const double add = term / (2 * n + 1);
    sum += add;
    if (std::abs(add) < 1e-18 * std::abs(sum)) break;
  }
  return 2.0 * kInvSqrtPi * sum;
}

// Laplace continued fraction for erfc, evaluated by modified Lentz.
// Accurate for x >= 2.5.
double erfc_cf(double x) {
  const double tiny = 1e-300;
  double f = x;
  double c = f;
  double d = 0.0;
  for (int n = 1; n < 300; ++n) {
    const double a = n / 2.0;  // partial numerators 1/2, 1, 3/2, ...
    const double b = x;
    d = b + a * d;
    if (d == 0) d = tiny;
    c = b + a / c;
    if (c == 0) c = tiny;
    d = 1.0 / d;
    const double delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-17) break;
  }
  return kInvSqrtPi * std::exp(-x * x) / f;
}
}  // namespace

double erfc(double x) {
  if (std::isnan(x)) return x;
  if (x < 0) return 2.0 - erfc(-x);
  if (x > 27.0) return 0.0;  // underflows double anyway
  if (x < 2.5) return 1.0 - erf_series(x);
  return erfc_cf(x);
}

double transmission_profile(double t, const TransmissionProfile& profile) {
  if (t < 0) throw std::domain_error("transmission_profile: t must be >= 0");
  if (!(profile.Q > 0) || !(profile.Ts > 0))
    throw std::invalid_argument("transmission_profile: Q and Ts must be positive");
  const double rem = std::fmod(t, profile.Ts);
  return rem == 0.0 ? 0.0 : profile.Q;
}

double impulse_response(double t, double r, const SystemParams& params) {
  if (!(t > 0)) throw std::domain_error("impulse_response: t must be positive");
  if (r < 0) throw std::domain_error("impulse_response: r must be >= 0");
  const double denom = std::pow(4.0 * kPi * params.D * t, 1.5);
  return params.Q / denom * std::exp(-r * r / (4.0 * params.D * t));
}

double concentration(double r, double t, const SystemParams& params) {
  if (!(r > 0)) throw std::domain_error("concentration: r must be positive");
  if (!(t > 0)) throw std::domain_error("concentration: t must be positive");
  const double arg = r / std::sqrt(4.0 * params.D * t);
  return params.Q / (params.dt * 4.0 * kPi * params.D * r) * erfc(arg);
}

double enter_rate(double Q, double D, double R, double dt) {
  return Q / (4.0 * kPi * D * R * dt);
}

double enter_rate(const SystemParams& params) {
  return enter_rate(params.Q, params.D, params.R, params.dt);
}

}  // namespace mcdd
