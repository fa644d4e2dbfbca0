#ifndef MCDD_DIFFUSION_HPP
#define MCDD_DIFFUSION_HPP

#include "mcdd/params.hpp"

namespace mcdd {

/// Always-on BCSK symbol stream: Q molecules during every pulse interval.
struct TransmissionProfile {
  double Q;   ///< pulse amplitude (molecule count)
  double Ts;  ///< pulse duration (s)
};

/// Emitted amplitude at time t: Q inside each open interval
/// (j*Ts, (j+1)*Ts), zero at exact multiples of Ts.
double transmission_profile(double t, const TransmissionProfile& profile);

/// Free-diffusion point-source kernel Q/(4 pi D t)^{3/2} * exp(-r^2/(4Dt)).
/// t must be positive.
double impulse_response(double t, double r, const SystemParams& params);

/// Complementary error function, absolute error <= 1e-12 on |x| <= 6.
double erfc(double x);

/// Concentration under continuous release: Q/(dt * 4 pi D r) * erfc(r / sqrt(4Dt)).
/// Nonnegative and nondecreasing in t; r and t must be positive.
double concentration(double r, double t, const SystemParams& params);

/// Steady-state enter rate lambda = Q / (4 pi D R dt).
double enter_rate(double Q, double D, double R, double dt);
double enter_rate(const SystemParams& params);

}  // namespace mcdd

#endif
