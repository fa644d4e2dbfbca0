#include "mcdd/ctmc_sim.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace mcdd {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Uniform in [0, 1) from the top 53 bits; portable across standard library
// implementations, unlike std::uniform_real_distribution.
double uniform01(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

double exponential(std::mt19937_64& eng, double rate) {
  const double u = uniform01(eng);
  return -std::log1p(-u) / rate;  // 1-u in (0,1], so log1p is finite
}

Replication run_one(const ChainSpec& chain, std::uint64_t max_events,
                    std::uint64_t warmup_events, std::uint64_t stream_seed,
                    std::ostream* trajectory) {
  std::mt19937_64 eng(stream_seed);
  Replication rep;
  rep.occupancy.assign(static_cast<std::size_t>(chain.Nm + 1), 0.0);

  if (chain.lambda == 0) {
    // The empty state is absorbing: no arrivals ever occur, so the whole
    // trajectory sits at state 0 with zero departures.
    rep.occupancy[0] = 1.0;
    rep.elapsed_time = 1.0;
    return rep;
  }

  std::int64_t state = 0;
  double clock = 0.0;
  bool warm = warmup_events == 0;
  double last_arrival = -1.0;  // post-warmup arrival timestamp; <0 means none yet
  double ia_sum = 0.0, ia_sumsq = 0.0;

  for (std::uint64_t ev = 0; ev < max_events; ++ev) {
    double death = 0.0, mu_n = 0.0, gamma_n = 0.0;
    if (state >= 1) {
      mu_n = chain.mu_i(state);
      gamma_n = chain.gamma_i(state);
      death = mu_n + gamma_n;
    }
    const double total = chain.lambda + death;
    if (total <= 0)
      throw std::runtime_error("simulate: zero total rate in state " +
                               std::to_string(state) + " (deadlock)");
    const double dt = exponential(eng, total);
    if (warm) rep.occupancy[static_cast<std::size_t>(state)] += dt;
    clock += dt;

    const double u = uniform01(eng) * total;
    const char* kind;
    if (u < chain.lambda) {
      if (warm) {
        ++rep.counts.arrival;
        if (last_arrival >= 0) {
          const double gap = clock - last_arrival;
          ia_sum += gap;
          ia_sumsq += gap * gap;
          ++rep.interarrival_count;
        }
        last_arrival = clock;
      }
      if (state == chain.Nm) {
        kind = "blocked";
        if (warm) ++rep.counts.blocked;
      } else {
        kind = "arrival";
        ++state;
      }
    } else if (u < chain.lambda + mu_n) {
      kind = "unbind";
      if (warm) ++rep.counts.unbind;
      --state;
    } else {
      kind = "reject";
      if (warm) ++rep.counts.reject;
      --state;
    }
    if (trajectory) {
      char line[96];
      std::snprintf(line, sizeof line, "%.17g,%lld,%s\n", clock,
                    static_cast<long long>(state), kind);
      *trajectory << line;
    }
    if (!warm && ev + 1 == warmup_events) {
      warm = true;
      rep.state_at_warmup = state;
    }
  }
  rep.state_final = state;

  double elapsed = 0.0;
  for (double& t : rep.occupancy) elapsed += t;
  rep.elapsed_time = elapsed;
  if (elapsed > 0)
    for (double& t : rep.occupancy) t /= elapsed;
  if (rep.interarrival_count > 0) {
    const double n = static_cast<double>(rep.interarrival_count);
    rep.interarrival_mean = ia_sum / n;
    rep.interarrival_var = ia_sumsq / n - rep.interarrival_mean * rep.interarrival_mean;
  }
  return rep;
}

}  // namespace

SimResult simulate(const SimConfig& config, std::ostream* trajectory) {
  if (config.chain.Nm < 1 || config.chain.Nr < 1)
    throw std::invalid_argument("simulate: invalid chain");
  if (config.replications < 1)
    throw std::invalid_argument("simulate: replications must be >= 1");
  std::uint64_t warmup = config.warmup_events;
  if (warmup == UINT64_MAX) warmup = config.max_events / 10;
  if (warmup >= config.max_events)
    throw std::invalid_argument("simulate: max_events must exceed warmup_events");

  SimResult out;
  out.seed = config.seed;
  out.occupancy.assign(static_cast<std::size_t>(config.chain.Nm + 1), 0.0);

  double total_time = 0.0;
  for (unsigned r = 0; r < config.replications; ++r) {
    // Independent stream per replication, derived from (seed, index).
    const std::uint64_t stream = splitmix64(config.seed ^ splitmix64(r));
    Replication rep = run_one(config.chain, config.max_events, warmup, stream,
                              r == 0 ? trajectory : nullptr);
    out.counts.arrival += rep.counts.arrival;
    out.counts.blocked += rep.counts.blocked;
    out.counts.unbind += rep.counts.unbind;
    out.counts.reject += rep.counts.reject;
    for (std::size_t i = 0; i < out.occupancy.size(); ++i)
      out.occupancy[i] += rep.occupancy[i] * rep.elapsed_time;
    total_time += rep.elapsed_time;
    out.replications.push_back(std::move(rep));
  }
  if (total_time > 0)
    for (double& p : out.occupancy) p /= total_time;

  const double exits = static_cast<double>(out.counts.reject + out.counts.unbind +
                                           out.counts.blocked);
  out.rejection_fraction_exits =
      exits > 0 ? static_cast<double>(out.counts.reject) / exits : 0.0;
  out.rejection_fraction_arrivals =
      out.counts.arrival > 0
          ? static_cast<double>(out.counts.reject) / static_cast<double>(out.counts.arrival)
          : 0.0;
  return out;
}

ValidationReport validate_chain(const SimConfig& config,
                                const ValidationTolerances& tol) {
  return validate_chain(config, steady_state(config.chain), tol);
}

ValidationReport validate_chain(const SimConfig& config,
                                const SteadyState& expected,
                                const ValidationTolerances& tol) {
  if (expected.probs.size() != static_cast<std::size_t>(config.chain.Nm + 1))
    throw std::invalid_argument("validate_chain: expected distribution size mismatch");
  const SimResult sim = simulate(config);
  ValidationReport rep;

  rep.per_state_deviation.resize(expected.probs.size());
  double tv = 0.0;
  for (std::size_t i = 0; i < expected.probs.size(); ++i) {
    const double dev = std::abs(sim.occupancy[i] - expected.probs[i]);
    rep.per_state_deviation[i] = dev;
    rep.max_deviation = std::max(rep.max_deviation, dev);
    tv += dev;
  }
  rep.tv_distance = 0.5 * tv;

  const double departures =
      static_cast<double>(sim.counts.reject + sim.counts.unbind);
  rep.empirical_rejection_fraction =
      departures > 0 ? static_cast<double>(sim.counts.reject) / departures : 0.0;
  const double admitted_rate = config.chain.lambda * (1.0 - expected.blocking);
  rep.analytic_rejection_fraction =
      admitted_rate > 0 ? expected.reject_throughput / admitted_rate : 0.0;

  // Pool interarrival statistics across replications.
  double ia_n = 0, ia_mean_acc = 0, ia_var_acc = 0;
  for (const auto& r : sim.replications) {
    const double n = static_cast<double>(r.interarrival_count);
    ia_n += n;
    ia_mean_acc += r.interarrival_mean * n;
    ia_var_acc += r.interarrival_var * n;
  }
  if (ia_n > 0) {
    rep.interarrival_mean = ia_mean_acc / ia_n;
    rep.interarrival_var = ia_var_acc / ia_n;
  }
  rep.expected_interarrival_mean =
      config.chain.lambda > 0 ? 1.0 / config.chain.lambda : 0.0;
  rep.expected_interarrival_var =
      rep.expected_interarrival_mean * rep.expected_interarrival_mean;

  rep.tv_ok = rep.tv_distance < tol.tv_max;
  if (rep.analytic_rejection_fraction > 0) {
    rep.rejection_ok = std::abs(rep.empirical_rejection_fraction -
                                rep.analytic_rejection_fraction) <=
                       tol.rejection_rel * rep.analytic_rejection_fraction;
  } else {
    rep.rejection_ok = rep.empirical_rejection_fraction == 0;
  }
  if (config.chain.lambda > 0 && ia_n > 0) {
    rep.interarrival_ok =
        std::abs(rep.interarrival_mean - rep.expected_interarrival_mean) <=
        tol.interarrival_rel * rep.expected_interarrival_mean;
  } else {
    rep.interarrival_ok = config.chain.lambda == 0;
  }
  rep.passed = rep.tv_ok && rep.rejection_ok && rep.interarrival_ok;
  return rep;
}

std::string ValidationReport::text() const {
  std::ostringstream os;
  os << "validation " << (passed ? "PASS" : "FAIL") << "\n";
  os << "  tv_distance              = " << tv_distance << " ["
     << (tv_ok ? "ok" : "FAIL") << "]\n";
  os << "  max_per_state_deviation  = " << max_deviation << "\n";
  os << "  rejection fraction emp   = " << empirical_rejection_fraction
     << " vs analytic " << analytic_rejection_fraction << " ["
     << (rejection_ok ? "ok" : "FAIL") << "]\n";
  os << "  interarrival mean        = " << interarrival_mean << " vs 1/lambda "
     << expected_interarrival_mean << " [" << (interarrival_ok ? "ok" : "FAIL")
     << "]\n";
  os << "  interarrival variance    = " << interarrival_var << " vs "
     << expected_interarrival_var << "\n";
  if (!tv_ok) {
    std::size_t worst = 0;
    for (std::size_t i = 1; i < per_state_deviation.size(); ++i)
      if (per_state_deviation[i] > per_state_deviation[worst]) worst = i;
    os << "  worst state              = " << worst << " (deviation "
       << per_state_deviation[worst] << ")\n";
  }
  return os.str();
}

}  // namespace mcdd
