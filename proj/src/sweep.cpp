#include "mcdd/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "mcdd/diffusion.hpp"
#include "mcdd/dosage.hpp"
#include "mcdd/queue.hpp"

namespace mcdd {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt(std::int64_t v) { return std::to_string(v); }
std::string fmt(std::uint64_t v) { return std::to_string(v); }

SweepVar parse_var(const std::string& name) {
  if (name == "R") return SweepVar::R;
  if (name == "Q") return SweepVar::Q;
  if (name == "mu") return SweepVar::mu;
  if (name == "i") return SweepVar::i;
  if (name == "f") return SweepVar::f;
  if (name == "alpha") return SweepVar::alpha;
  throw std::invalid_argument("sweep: unknown variable '" + name +
                              "' (expected R, Q, mu, i, f or alpha)");
}

}  // namespace

SweepSpec parse_sweep(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos)
    throw std::invalid_argument("sweep: expected var=start:stop:steps[:log]");
  SweepSpec spec{};
  spec.var = parse_var(text.substr(0, eq));

  std::vector<std::string> parts;
  std::stringstream ss(text.substr(eq + 1));
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() < 3 || parts.size() > 4)
    throw std::invalid_argument("sweep: expected var=start:stop:steps[:log]");
  try {
    spec.start = std::stod(parts[0]);
    spec.stop = std::stod(parts[1]);
    spec.steps = std::stoi(parts[2]);
  } catch (const std::exception&) {
    throw std::invalid_argument("sweep: non-numeric start/stop/steps");
  }
  if (parts.size() == 4) {
    if (parts[3] != "log")
      throw std::invalid_argument("sweep: trailing token must be 'log'");
    spec.log_scale = true;
  }
  if (!(spec.start < spec.stop))
    throw std::invalid_argument("sweep: start must be below stop");
  if (spec.steps < 2) throw std::invalid_argument("sweep: steps must be >= 2");
  if (spec.log_scale && !(spec.start > 0))
    throw std::invalid_argument("sweep: log scale requires positive start");
  return spec;
}

std::vector<double> sweep_values(const SweepSpec& spec) {
  if (!(spec.start < spec.stop))
    throw std::invalid_argument("sweep: start must be below stop");
  if (spec.steps < 2) throw std::invalid_argument("sweep: steps must be >= 2");
  std::vector<double> vals(static_cast<std::size_t>(spec.steps));
  const double n = spec.steps - 1;
  if (spec.log_scale) {
    const double la = std::log(spec.start), lb = std::log(spec.stop);
    for (int k = 0; k < spec.steps; ++k)
      vals[static_cast<std::size_t>(k)] = std::exp(la + (lb - la) * k / n);
    vals.back() = spec.stop;
  } else {
    for (int k = 0; k < spec.steps; ++k)
      vals[static_cast<std::size_t>(k)] =
          spec.start + (spec.stop - spec.start) * k / n;
    vals.back() = spec.stop;
  }
  return vals;
}

std::string rates_csv(const SystemParams& params, const SweepSpec& spec) {
  const char* name;
  switch (spec.var) {
    case SweepVar::R: name = "R"; break;
    case SweepVar::Q: name = "Q"; break;
    case SweepVar::mu: name = "mu"; break;
    default:
      throw std::invalid_argument("rates sweep: variable must be R, Q or mu");
  }
  std::ostringstream os;
  os << name << ",lambda,gamma,gamma_prime,gamma_gap,gamma_a,gamma_b\n";
  for (double v : sweep_values(spec)) {
    SystemParams p = params;
    switch (spec.var) {
      case SweepVar::R: p.R = v; break;
      case SweepVar::Q: p.Q = v; break;
      case SweepVar::mu: p.mu = v; break;
      default: break;
    }
    const RateSet r = derive_rates(p);
    os << fmt(v) << ',' << fmt(r.lambda) << ',' << fmt(r.gamma) << ','
       << fmt(r.gamma_prime) << ',' << fmt(r.gamma - r.gamma_prime) << ','
       << fmt(r.gamma_a) << ',' << fmt(r.gamma_b) << '\n';
  }
  return os.str();
}

std::string state_rates_csv(const SystemParams& params, const SweepSpec& spec,
                            const std::vector<std::int64_t>& nr_list) {
  if (spec.var != SweepVar::i)
    throw std::invalid_argument("state-rates sweep: variable must be i");
  if (nr_list.empty())
    throw std::invalid_argument("state-rates sweep: need at least one Nr");
  validate(params);
  const std::int64_t Nm = capacity(params);
  const double lambda = enter_rate(params);
  const double gamma = rejection_rate(lambda, params.mu);

  std::ostringstream os;
  os << "i";
  for (std::int64_t nr : nr_list)
    os << ",mu_i_Nr" << nr << ",gamma_i_Nr" << nr;
  os << '\n';
  for (double v : sweep_values(spec)) {
    const auto i = static_cast<std::int64_t>(v);
    if (i < 1 || i > Nm)
      throw std::invalid_argument("state-rates sweep: state " +
                                  std::to_string(i) +
                                  " outside 1..Nm=" + std::to_string(Nm));
    os << fmt(i);
    for (std::int64_t nr : nr_list) {
      auto [m, g] = state_rates(i, nr, params.mu, gamma);
      os << ',' << fmt(m) << ',' << fmt(g);
    }
    os << '\n';
  }
  return os.str();
}

std::string bounds_csv(const SystemParams& params, const SweepSpec& spec,
                       const std::vector<double>& f_list) {
  validate(params);
  std::ostringstream os;
  if (spec.var == SweepVar::R) {
    if (f_list.empty())
      throw std::invalid_argument("bounds sweep: need at least one f");
    os << "R";
    for (double f : f_list)
      os << ",feasible_f" << f << ",qmin_rate_f" << f << ",gap_f" << f;
    os << ",qmax_rate\n";
    for (double v : sweep_values(spec)) {
      SystemParams p = params;
      p.R = v;
      os << fmt(v);
      for (double f : f_list) {
        p.f = f;
        const double fstar = feasibility_boundary(p.Kplus);
        if (f < fstar) {
          const double qmin = q_min_rate(p);
          os << ",1," << fmt(qmin) << ','
             << fmt(qmin - q_min_rate_no_rejection(p));
        } else {
          os << ",0,nan,nan";
        }
      }
      os << ',' << fmt(q_max_rate(p)) << '\n';
    }
  } else if (spec.var == SweepVar::f) {
    os << "f,feasible,qmin_rate,gap,qmax_rate\n";
    for (double v : sweep_values(spec)) {
      SystemParams p = params;
      p.f = v;
      const double fstar = feasibility_boundary(p.Kplus);
      os << fmt(v);
      if (v > 0 && v < fstar) {
        const double qmin = q_min_rate(p);
        os << ",1," << fmt(qmin) << ','
           << fmt(qmin - q_min_rate_no_rejection(p));
      } else {
        os << ",0,nan,nan";
      }
      os << ',' << fmt(q_max_rate(p)) << '\n';
    }
  } else {
    throw std::invalid_argument("bounds sweep: variable must be R or f");
  }
  return os.str();
}

std::string steady_csv(const ChainSpec& chain) {
  const SteadyState ss = steady_state(chain);
  std::ostringstream os;
  os << "n,P_n\n";
  for (std::size_t n = 0; n < ss.probs.size(); ++n)
    if (ss.probs[n] != 0.0)
      os << n << ',' << fmt(ss.probs[n]) << '\n';
  return os.str();
}

std::string steady_csv(const SystemParams& params) {
  return steady_csv(build_chain(params));
}

std::string simulate_csv(const SimResult& result) {
  std::ostringstream os;
  os << "n,P_hat_n\n";
  for (std::size_t n = 0; n < result.occupancy.size(); ++n)
    if (result.occupancy[n] != 0.0)
      os << n << ',' << fmt(result.occupancy[n]) << '\n';
  return os.str();
}

std::string sim_summary_csv(const SimResult& result) {
  std::ostringstream os;
  os << "metric,value\n";
  os << "seed," << result.seed << '\n';
  os << "replications," << result.replications.size() << '\n';
  os << "arrivals," << fmt(result.counts.arrival) << '\n';
  os << "blocked," << fmt(result.counts.blocked) << '\n';
  os << "unbinds," << fmt(result.counts.unbind) << '\n';
  os << "rejects," << fmt(result.counts.reject) << '\n';
  os << "rejection_fraction_exits," << fmt(result.rejection_fraction_exits) << '\n';
  os << "rejection_fraction_arrivals," << fmt(result.rejection_fraction_arrivals)
     << '\n';
  return os.str();
}

}  // namespace mcdd
