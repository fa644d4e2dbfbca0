#ifndef MCDD_SWEEP_HPP
#define MCDD_SWEEP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mcdd/ctmc_sim.hpp"
#include "mcdd/params.hpp"

namespace mcdd {

enum class SweepVar { R, Q, mu, i, f, alpha };

struct SweepSpec {
  SweepVar var;
  double start;
  double stop;
  int steps;
  bool log_scale = false;
};

/// Parse "var=start:stop:steps[:log]". Throws std::invalid_argument on
/// malformed input.
SweepSpec parse_sweep(const std::string& text);

/// The grid points of the sweep (linear or log spaced, endpoints included).
std::vector<double> sweep_values(const SweepSpec& spec);

/// All CSV emitters: comma-separated, '.' decimal, LF line endings, header
/// row always present, 17 significant digits.

/// Columns: <var>,lambda,gamma,gamma_prime,gamma_gap,gamma_a,gamma_b.
/// var must be R, Q or mu.
std::string rates_csv(const SystemParams& params, const SweepSpec& spec);

/// Columns: i, then mu_i_Nr<n>,gamma_i_Nr<n> per requested receptor count.
/// var must be i; values are truncated to integer states and must not
/// exceed the chain capacity.
std::string state_rates_csv(const SystemParams& params, const SweepSpec& spec,
                            const std::vector<std::int64_t>& nr_list);

/// Sweep over R: columns R,qmin_rate_f<f>,gap_f<f>...,qmax_rate.
/// Sweep over f: columns f,feasible,qmin_rate,gap,qmax_rate.
/// Infeasible f cells hold nan and feasible=0; never fatal.
std::string bounds_csv(const SystemParams& params, const SweepSpec& spec,
                       const std::vector<double>& f_list);

/// Columns: n,P_n. States whose probability is exactly zero are omitted.
std::string steady_csv(const SystemParams& params);
std::string steady_csv(const ChainSpec& chain);

/// Columns: n,P_hat_n (empirical occupancy; zero entries omitted).
std::string simulate_csv(const SimResult& result);

/// Columns: metric,value — event counts and rejection fractions.
std::string sim_summary_csv(const SimResult& result);

}  // namespace mcdd

#endif
