#ifndef MCDD_DOSAGE_HPP
#define MCDD_DOSAGE_HPP

#include "mcdd/params.hpp"

namespace mcdd {

/// Where the configured Q falls relative to the allowable interval.
enum class DoseVerdict {
  below,          ///< Q < Q_min: does not affect the target
  within,         ///< Q_min <= Q <= Q_max
  above,          ///< Q > Q_max: would cause side effects
  indeterminate,  ///< lower bound infeasible (f >= f_star)
};

struct DoseBounds {
  double q_min_rate;   ///< Q_min / dt (molecules/s); NaN when infeasible
  double q_max_rate;   ///< Q_max / dt = 4 pi D R Nm (molecules/s)
  double q_min;        ///< per-dt count; NaN when infeasible
  double q_max;        ///< per-dt count
  bool feasible;       ///< f < f_star
  bool interval_empty; ///< q_min > q_max (reported, never clamped)
  double f_star;       ///< feasibility boundary K+/(1+K+)
  DoseVerdict verdict;
};

/// Fraction of activated receptors at concentration C:
/// f = K+ C / (K+ C + mu + gamma), in [0, 1).
double occupancy_factor(double C, double Kplus, double mu, double gamma);

/// Inverse of occupancy_factor: C = f (mu + gamma) / (K+ (1 - f)).
double min_effective_concentration(double f, double Kplus, double mu,
                                   double gamma);

/// Feasibility boundary for the lower bound: f_star = K+ / (1 + K+).
double feasibility_boundary(double Kplus);

/// Lower bound on the release rate,
/// Q_min/dt = 4 pi D R mu f (1-f) / (K+ (1-f)^2 - f^2/K+).
/// Throws when f >= f_star (the denominator vanishes or turns negative);
/// the message names f_star.
double q_min_rate(const SystemParams& params);

/// Lower bound with the rejection rate ignored (gamma = 0 baseline):
/// 4 pi D R mu f / (K+ (1-f)).
double q_min_rate_no_rejection(const SystemParams& params);

/// Upper bound on the release rate, Q_max/dt = 4 pi D R Nm.
double q_max_rate(const SystemParams& params);

/// Both bounds plus a verdict for params.Q.
DoseBounds dose_interval(const SystemParams& params);

}  // namespace mcdd

#endif
