#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mcdd/ctmc_sim.hpp"
#include "mcdd/diffusion.hpp"
#include "mcdd/dosage.hpp"
#include "mcdd/params.hpp"
#include "mcdd/queue.hpp"
#include "mcdd/sweep.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Queueing analysis and stochastic simulation of a molecular-"
            "communication drug delivery receiver";

  py::class_<mcdd::SystemParams>(m, "SystemParams")
      .def(py::init<>())
      .def_readwrite("D", &mcdd::SystemParams::D)
      .def_readwrite("R", &mcdd::SystemParams::R)
      .def_readwrite("Q", &mcdd::SystemParams::Q)
      .def_readwrite("dt", &mcdd::SystemParams::dt)
      .def_readwrite("mu", &mcdd::SystemParams::mu)
      .def_readwrite("Kplus", &mcdd::SystemParams::Kplus)
      .def_readwrite("Nr", &mcdd::SystemParams::Nr)
      .def_readwrite("Rr", &mcdd::SystemParams::Rr)
      .def_readwrite("Re", &mcdd::SystemParams::Re)
      .def_readwrite("Ra", &mcdd::SystemParams::Ra)
      .def_readwrite("alpha", &mcdd::SystemParams::alpha)
      .def_readwrite("f", &mcdd::SystemParams::f);

  m.def("load_params", &mcdd::load_params, py::arg("json_text"));
  m.def("load_params_file", &mcdd::load_params_file, py::arg("path"));
  m.def("validate_params", &mcdd::validate, py::arg("params"));
  m.def("capacity",
        py::overload_cast<double, double, double>(&mcdd::capacity),
        py::arg("Re"), py::arg("Rr"), py::arg("Ra"));

  m.def("erfc", &mcdd::erfc, py::arg("x"));
  m.def("impulse_response", &mcdd::impulse_response, py::arg("t"), py::arg("r"),
        py::arg("params"));
  m.def("concentration", &mcdd::concentration, py::arg("r"), py::arg("t"),
        py::arg("params"));
  m.def("enter_rate",
        py::overload_cast<double, double, double, double>(&mcdd::enter_rate),
        py::arg("Q"), py::arg("D"), py::arg("R"), py::arg("dt"));

  m.def("rejection_rate", &mcdd::rejection_rate, py::arg("lam"), py::arg("mu"));
  m.def("rejection_probability", &mcdd::rejection_probability, py::arg("lam"),
        py::arg("mu"), py::arg("gamma"));
  m.def("p0_single", &mcdd::p0_single, py::arg("lam"), py::arg("mu"),
        py::arg("gamma"));
  m.def("gamma_prime", &mcdd::gamma_prime, py::arg("lam"), py::arg("mu"));
  m.def("split_gamma", &mcdd::split_gamma, py::arg("gamma"), py::arg("alpha"));
  m.def("state_rates", &mcdd::state_rates, py::arg("i"), py::arg("Nr"),
        py::arg("mu"), py::arg("gamma"));

  py::class_<mcdd::RateSet>(m, "RateSet")
      .def_readonly("lam", &mcdd::RateSet::lambda)
      .def_readonly("mu", &mcdd::RateSet::mu)
      .def_readonly("gamma", &mcdd::RateSet::gamma)
      .def_readonly("gamma_prime", &mcdd::RateSet::gamma_prime)
      .def_readonly("gamma_a", &mcdd::RateSet::gamma_a)
      .def_readonly("gamma_b", &mcdd::RateSet::gamma_b)
      .def_readonly("Nm", &mcdd::RateSet::Nm);
  m.def("derive_rates", &mcdd::derive_rates, py::arg("params"));

  py::class_<mcdd::ChainSpec>(m, "ChainSpec")
      .def_readonly("Nm", &mcdd::ChainSpec::Nm)
      .def_readonly("Nr", &mcdd::ChainSpec::Nr)
      .def_readonly("lam", &mcdd::ChainSpec::lambda)
      .def_readonly("mu", &mcdd::ChainSpec::mu)
      .def_readonly("gamma", &mcdd::ChainSpec::gamma)
      .def("mu_i", &mcdd::ChainSpec::mu_i, py::arg("i"))
      .def("gamma_i", &mcdd::ChainSpec::gamma_i, py::arg("i"))
      .def("death_rate", &mcdd::ChainSpec::death_rate, py::arg("i"));
  m.def("make_chain", &mcdd::make_chain, py::arg("lam"), py::arg("mu"),
        py::arg("gamma"), py::arg("Nr"), py::arg("Nm"));
  m.def("build_chain", &mcdd::build_chain, py::arg("params"),
        py::arg("max_states") = 10'000'000);

  py::class_<mcdd::SteadyState>(m, "SteadyState")
      .def_readonly("probs", &mcdd::SteadyState::probs)
      .def_readonly("blocking", &mcdd::SteadyState::blocking)
      .def_readonly("unbind_throughput", &mcdd::SteadyState::unbind_throughput)
      .def_readonly("reject_throughput", &mcdd::SteadyState::reject_throughput);
  m.def("steady_state", &mcdd::steady_state, py::arg("chain"));

  m.def("occupancy_factor", &mcdd::occupancy_factor, py::arg("C"),
        py::arg("Kplus"), py::arg("mu"), py::arg("gamma"));
  m.def("min_effective_concentration", &mcdd::min_effective_concentration,
        py::arg("f"), py::arg("Kplus"), py::arg("mu"), py::arg("gamma"));
  m.def("feasibility_boundary", &mcdd::feasibility_boundary, py::arg("Kplus"));
  m.def("q_min_rate", &mcdd::q_min_rate, py::arg("params"));
  m.def("q_min_rate_no_rejection", &mcdd::q_min_rate_no_rejection,
        py::arg("params"));
  m.def("q_max_rate", &mcdd::q_max_rate, py::arg("params"));

  py::enum_<mcdd::DoseVerdict>(m, "DoseVerdict")
      .value("below", mcdd::DoseVerdict::below)
      .value("within", mcdd::DoseVerdict::within)
      .value("above", mcdd::DoseVerdict::above)
      .value("indeterminate", mcdd::DoseVerdict::indeterminate);
  py::class_<mcdd::DoseBounds>(m, "DoseBounds")
      .def_readonly("q_min_rate", &mcdd::DoseBounds::q_min_rate)
      .def_readonly("q_max_rate", &mcdd::DoseBounds::q_max_rate)
      .def_readonly("q_min", &mcdd::DoseBounds::q_min)
      .def_readonly("q_max", &mcdd::DoseBounds::q_max)
      .def_readonly("feasible", &mcdd::DoseBounds::feasible)
      .def_readonly("interval_empty", &mcdd::DoseBounds::interval_empty)
      .def_readonly("f_star", &mcdd::DoseBounds::f_star)
      .def_readonly("verdict", &mcdd::DoseBounds::verdict);
  m.def("dose_interval", &mcdd::dose_interval, py::arg("params"));

  py::class_<mcdd::SimConfig>(m, "SimConfig")
      .def(py::init([](const mcdd::ChainSpec& chain, std::uint64_t max_events,
                       std::uint64_t warmup_events, std::uint64_t seed,
                       unsigned replications) {
             mcdd::SimConfig cfg;
             cfg.chain = chain;
             cfg.max_events = max_events;
             cfg.warmup_events = warmup_events;
             cfg.seed = seed;
             cfg.replications = replications;
             return cfg;
           }),
           py::arg("chain"), py::arg("max_events") = 1'000'000,
           py::arg("warmup_events") = UINT64_MAX, py::arg("seed") = 0,
           py::arg("replications") = 1);

  py::class_<mcdd::EventCounts>(m, "EventCounts")
      .def_readonly("arrival", &mcdd::EventCounts::arrival)
      .def_readonly("blocked", &mcdd::EventCounts::blocked)
      .def_readonly("unbind", &mcdd::EventCounts::unbind)
      .def_readonly("reject", &mcdd::EventCounts::reject);
  py::class_<mcdd::SimResult>(m, "SimResult")
      .def_readonly("occupancy", &mcdd::SimResult::occupancy)
      .def_readonly("counts", &mcdd::SimResult::counts)
      .def_readonly("rejection_fraction_exits",
                    &mcdd::SimResult::rejection_fraction_exits)
      .def_readonly("rejection_fraction_arrivals",
                    &mcdd::SimResult::rejection_fraction_arrivals)
      .def_readonly("seed", &mcdd::SimResult::seed);
  m.def("simulate",
        [](const mcdd::SimConfig& cfg) { return mcdd::simulate(cfg); },
        py::arg("config"));

  py::class_<mcdd::ValidationReport>(m, "ValidationReport")
      .def_readonly("tv_distance", &mcdd::ValidationReport::tv_distance)
      .def_readonly("max_deviation", &mcdd::ValidationReport::max_deviation)
      .def_readonly("empirical_rejection_fraction",
                    &mcdd::ValidationReport::empirical_rejection_fraction)
      .def_readonly("analytic_rejection_fraction",
                    &mcdd::ValidationReport::analytic_rejection_fraction)
      .def_readonly("passed", &mcdd::ValidationReport::passed)
      .def("text", &mcdd::ValidationReport::text);
  m.def("validate_chain",
        [](const mcdd::SimConfig& cfg) { return mcdd::validate_chain(cfg); },
        py::arg("config"));

  m.def("rates_csv", &mcdd::rates_csv, py::arg("params"), py::arg("spec"));
  m.def("parse_sweep", &mcdd::parse_sweep, py::arg("text"));
  py::class_<mcdd::SweepSpec>(m, "SweepSpec");
  m.def("bounds_csv", &mcdd::bounds_csv, py::arg("params"), py::arg("spec"),
        py::arg("f_list"));
  m.def("state_rates_csv", &mcdd::state_rates_csv, py::arg("params"),
        py::arg("spec"), py::arg("nr_list"));
  m.def("steady_csv",
        py::overload_cast<const mcdd::ChainSpec&>(&mcdd::steady_csv),
        py::arg("chain"));
}
