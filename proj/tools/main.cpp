// mcdd: queueing analysis and stochastic simulation of a molecular-
// communication drug delivery receiver.
//
// Exit codes: 0 success, 1 usage error, 2 domain/config error,
// 3 validation failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mcdd/ctmc_sim.hpp"
#include "mcdd/diffusion.hpp"
#include "mcdd/dosage.hpp"
#include "mcdd/params.hpp"
#include "mcdd/queue.hpp"
#include "mcdd/sweep.hpp"

namespace {

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << content;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("MCDD_SEED"))
    return std::strtoull(env, nullptr, 10);
  return 0;
}

mcdd::ChainSpec chain_for(const mcdd::SystemParams& params,
                          std::int64_t nm_override) {
  if (nm_override > 0) {
    const double lambda = mcdd::enter_rate(params);
    const double gamma = mcdd::rejection_rate(lambda, params.mu);
    return mcdd::make_chain(lambda, params.mu, gamma, params.Nr, nm_override);
  }
  return mcdd::build_chain(params);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reception-process analysis for molecular-communication drug delivery"};
  app.require_subcommand(1);

  std::string config_path;
  std::string sweep_text;
  std::string out_path;
  std::uint64_t seed = default_seed();
  std::uint64_t events = 1'000'000;
  unsigned reps = 1;
  std::vector<double> f_list;
  std::vector<std::int64_t> nr_list;
  double alpha = -1;
  std::int64_t nm_override = 0;
  std::string trajectory_path;

  app.add_option("--config", config_path, "Path to JSON config file")->required();
  app.add_option("--out", out_path, "Output file (default stdout)");

  auto* rates = app.add_subcommand("rates", "Sweep lambda/gamma rates over R, Q or mu");
  rates->add_option("--sweep", sweep_text, "var=start:stop:steps[:log]")->required();
  rates->add_option("--alpha", alpha, "Override the gamma split share");

  auto* state_rates = app.add_subcommand("state-rates", "Per-state death rates over i");
  state_rates->add_option("--sweep", sweep_text, "i=start:stop:steps[:log]")->required();
  state_rates->add_option("--nr", nr_list, "Receptor counts (one column pair each)");

  auto* bounds = app.add_subcommand("bounds", "Dosage interval over R or f");
  bounds->add_option("--sweep", sweep_text, "var=start:stop:steps[:log]")->required();
  bounds->add_option("--f", f_list, "Occupancy factors (R sweeps only)");

  auto* dose = app.add_subcommand("dose", "Dosage interval and verdict for the configured Q");

  auto* steady = app.add_subcommand("steady", "Analytical steady-state distribution");
  steady->add_option("--nm", nm_override, "Override the chain capacity");

  auto* simulate = app.add_subcommand("simulate", "Stochastic trajectory of the chain");
  simulate->add_option("--seed", seed, "RNG seed (default $MCDD_SEED or 0)");
  simulate->add_option("--events", events, "Events per replication");
  simulate->add_option("--reps", reps, "Replications");
  simulate->add_option("--nm", nm_override, "Override the chain capacity");
  simulate->add_option("--trajectory", trajectory_path,
                       "Write a (time,state,event_type) CSV for replication 0");

  auto* validate_cmd = app.add_subcommand("validate", "Simulation vs analytical steady state");
  validate_cmd->add_option("--seed", seed, "RNG seed (default $MCDD_SEED or 0)");
  validate_cmd->add_option("--events", events, "Events per replication");
  validate_cmd->add_option("--reps", reps, "Replications");
  validate_cmd->add_option("--nm", nm_override, "Override the chain capacity");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    const mcdd::SystemParams params = mcdd::load_params_file(config_path);

    if (*rates) {
      mcdd::SystemParams p = params;
      if (alpha >= 0) p.alpha = alpha;
      write_output(out_path, mcdd::rates_csv(p, mcdd::parse_sweep(sweep_text)));
    } else if (*state_rates) {
      if (nr_list.empty()) nr_list.push_back(params.Nr);
      write_output(out_path, mcdd::state_rates_csv(
                                 params, mcdd::parse_sweep(sweep_text), nr_list));
    } else if (*bounds) {
      if (f_list.empty()) f_list.push_back(params.f);
      write_output(out_path,
                   mcdd::bounds_csv(params, mcdd::parse_sweep(sweep_text), f_list));
    } else if (*dose) {
      const mcdd::DoseBounds b = mcdd::dose_interval(params);
      std::ostringstream os;
      os << "metric,value\n";
      os << "f_star," << b.f_star << '\n';
      os << "feasible," << (b.feasible ? 1 : 0) << '\n';
      os << "interval_empty," << (b.interval_empty ? 1 : 0) << '\n';
      char buf[40];
      auto put = [&](const char* k, double v) {
        std::snprintf(buf, sizeof buf, "%.17g", v);
        os << k << ',' << buf << '\n';
      };
      put("qmin_rate", b.q_min_rate);
      put("qmax_rate", b.q_max_rate);
      put("qmin", b.q_min);
      put("qmax", b.q_max);
      const char* verdict = "indeterminate";
      switch (b.verdict) {
        case mcdd::DoseVerdict::below: verdict = "below: does not affect the target"; break;
        case mcdd::DoseVerdict::within: verdict = "within"; break;
        case mcdd::DoseVerdict::above: verdict = "above: would cause side effects"; break;
        case mcdd::DoseVerdict::indeterminate: break;
      }
      os << "verdict," << verdict << '\n';
      write_output(out_path, os.str());
    } else if (*steady) {
      write_output(out_path, mcdd::steady_csv(chain_for(params, nm_override)));
    } else if (*simulate) {
      mcdd::SimConfig cfg;
      cfg.chain = chain_for(params, nm_override);
      cfg.max_events = events;
      cfg.seed = seed;
      cfg.replications = reps;
      std::ofstream traj;
      std::ostream* traj_ptr = nullptr;
      if (!trajectory_path.empty()) {
        traj.open(trajectory_path, std::ios::binary);
        if (!traj) throw std::invalid_argument("cannot open trajectory file: " + trajectory_path);
        traj << "time,state,event_type\n";
        traj_ptr = &traj;
      }
      const mcdd::SimResult result = mcdd::simulate(cfg, traj_ptr);
      write_output(out_path, mcdd::simulate_csv(result) + mcdd::sim_summary_csv(result));
    } else if (*validate_cmd) {
      mcdd::SimConfig cfg;
      cfg.chain = chain_for(params, nm_override);
      cfg.max_events = events;
      cfg.seed = seed;
      cfg.replications = reps;
      const mcdd::ValidationReport report = mcdd::validate_chain(cfg);
      write_output(out_path, report.text());
      if (!report.passed) return 3;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
