#ifndef MCDD_CTMC_SIM_HPP
#define MCDD_CTMC_SIM_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mcdd/queue.hpp"

namespace mcdd {

struct SimConfig {
  ChainSpec chain;
  std::uint64_t max_events = 1'000'000;
  std::uint64_t warmup_events = UINT64_MAX;  ///< UINT64_MAX -> 10% of max_events
  std::uint64_t seed = 0;
  unsigned replications = 1;
};

struct EventCounts {
  std::uint64_t arrival = 0;  ///< admitted + blocked
  std::uint64_t blocked = 0;
  std::uint64_t unbind = 0;
  std::uint64_t reject = 0;
};

/// Per-replication summary. Counts cover the post-warmup window, so event
/// conservation reads
///   arrival == unbind + reject + blocked + (state_final - state_at_warmup).
struct Replication {
  std::vector<double> occupancy;  ///< time-weighted empirical P_n
  EventCounts counts;
  std::int64_t state_at_warmup = 0;
  std::int64_t state_final = 0;
  double elapsed_time = 0;  ///< simulated time after warmup
  double interarrival_mean = 0;
  double interarrival_var = 0;
  std::uint64_t interarrival_count = 0;
};

struct SimResult {
  std::vector<double> occupancy;  ///< time-weight merged across replications
  EventCounts counts;             ///< summed across replications
  double rejection_fraction_exits = 0;     ///< rejects/(rejects+unbinds+blocked)
  double rejection_fraction_arrivals = 0;  ///< rejects/arrivals
  std::vector<Replication> replications;
  std::uint64_t seed = 0;
};

/// Exact event-driven trajectory of the birth-death chain. In state n the
/// next event is exponential with rate lambda + mu_n + gamma_n; the type is
/// chosen proportionally. Arrivals in state Nm are counted as blocked and
/// leave the state unchanged. Fully reproducible given (seed, config);
/// replication r uses an independent generator stream derived from
/// splitmix64(seed, r).
///
/// When trajectory is non-null, replication 0 writes one CSV line
/// (time,state,event_type) per event.
SimResult simulate(const SimConfig& config, std::ostream* trajectory = nullptr);

struct ValidationTolerances {
  double tv_max = 0.02;
  double rejection_rel = 0.02;
  double interarrival_rel = 0.01;
};

struct ValidationReport {
  double tv_distance = 0;
  std::vector<double> per_state_deviation;  ///< |empirical - analytic|
  double max_deviation = 0;
  double empirical_rejection_fraction = 0;  ///< rejects/(rejects+unbinds)
  double analytic_rejection_fraction = 0;   ///< sum gamma_i P_i / (lambda (1-P_Nm))
  double interarrival_mean = 0;
  double interarrival_var = 0;
  double expected_interarrival_mean = 0;    ///< 1/lambda
  double expected_interarrival_var = 0;     ///< 1/lambda^2
  bool tv_ok = false;
  bool rejection_ok = false;
  bool interarrival_ok = false;
  bool passed = false;

  std::string text() const;
};

/// Simulate the chain and compare against an analytic steady state (by
/// default its own). Passing a different expected distribution makes this a
/// negative control.
ValidationReport validate_chain(const SimConfig& config,
                                const ValidationTolerances& tol = {});
ValidationReport validate_chain(const SimConfig& config,
                                const SteadyState& expected,
                                const ValidationTolerances& tol);

}  // namespace mcdd

#endif
