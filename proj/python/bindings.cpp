// Copyright 2026 The tomoent Authors
// SPDX-License-Identifier: Apache-2.0

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "tomoent/errors.hpp"
#include "tomoent/experiment.hpp"
#include "tomoent/fockcore.hpp"
#include "tomoent/indicators.hpp"
#include "tomoent/models.hpp"
#include "tomoent/tomography.hpp"
#include "tomoent/tseries.hpp"

namespace py = pybind11;
using namespace tomoent;

namespace {

Subsystem parse_mode(const std::string& s) {
  if (s == "A" || s == "a") return Subsystem::A;
  if (s == "B" || s == "b") return Subsystem::B;
  throw InvalidArgument("subsystem must be 'A' or 'B', got '" + s + "'");
}

py::dict record_dict(const indicators::IndicatorRecord& r) {
  py::dict d;
  d["t"] = r.t;
  d["svne"] = r.svne;
  d["sle"] = r.sle;
  d["xi_tei"] = r.xi_tei;
  d["xi_tei_prime"] = r.xi_tei_prime;
  d["xi_ipr"] = r.xi_ipr;
  d["d1"] = r.d1;
  d["d2"] = r.d2;
  d["d3"] = r.d3;
  d["delta"] = r.delta_svne_sle;
  return d;
}

indicators::IndicatorRecord evaluate(const BipartiteState& psi, double t, int n_a, int n_b,
                                     const tomography::QuadratureGrid& grid) {
  const indicators::IndicatorEvaluator eval(tomography::AngleGrid::equally_spaced(n_a, n_b), grid,
                                            psi.cutoff_a(), psi.cutoff_b());
  return eval.evaluate(psi, t);
}

tseries::LyapunovOptions lyap_options(int n_init, std::uint64_t seed, int theiler,
                                      double radius_fraction) {
  tseries::LyapunovOptions o;
  o.n_init = n_init;
  o.seed = seed;
  o.theiler = theiler;
  o.radius_fraction = radius_fraction;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "tomoent native core";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", base.ptr());
  py::register_exception<NormalizationError>(m, "NormalizationError", base.ptr());
  py::register_exception<ConvergenceError>(m, "ConvergenceError", base.ptr());
  py::register_exception<DegenerateSeriesError>(m, "DegenerateSeriesError", base.ptr());
  py::register_exception<ConfigError>(m, "ConfigError", base.ptr());

  py::class_<BipartiteState>(m, "BipartiteState")
      .def(py::init<int, int>(), py::arg("cutoff_a"), py::arg("cutoff_b"))
      .def(py::init<Eigen::MatrixXcd>(), py::arg("amplitudes"))
      .def_static("product", &BipartiteState::product, py::arg("a"), py::arg("b"))
      .def_static("basis", &BipartiteState::basis, py::arg("m"), py::arg("n"), py::arg("cutoff_a"),
                  py::arg("cutoff_b"))
      .def_property_readonly("cutoff_a", &BipartiteState::cutoff_a)
      .def_property_readonly("cutoff_b", &BipartiteState::cutoff_b)
      .def_property_readonly("amplitudes", &BipartiteState::amps)
      .def("norm_squared", &BipartiteState::norm_squared)
      .def("normalized", &BipartiteState::normalized)
      .def("top_layer_weight", &BipartiteState::top_layer_weight)
      .def("is_converged", &BipartiteState::is_converged, py::arg("tol") = kLeakageTolerance)
      .def("__repr__", [](const BipartiteState& s) {
        return "<BipartiteState cutoffs=(" + std::to_string(s.cutoff_a()) + ", " +
               std::to_string(s.cutoff_b()) + ")>";
      });

  m.def("overlap", &overlap, py::arg("bra"), py::arg("ket"));
  m.def(
      "reduced_density_matrix",
      [](const BipartiteState& s, const std::string& keep) { return partial_trace(s, parse_mode(keep)).matrix(); },
      py::arg("state"), py::arg("keep") = "A");
  m.def(
      "svne", [](const BipartiteState& s) { return svne(partial_trace(s, Subsystem::A)); }, py::arg("state"),
      "von Neumann entropy of the mode-A reduced state (natural log)");
  m.def(
      "sle", [](const BipartiteState& s) { return sle(partial_trace(s, Subsystem::A)); }, py::arg("state"),
      "Linear entropy 1 - Tr rho_A^2");

  py::class_<models::AtomFieldParams>(m, "AtomFieldParams")
      .def(py::init([](double omega_f, double omega_a, double gamma, double g) {
             models::AtomFieldParams p{omega_f, omega_a, gamma, g};
             p.validate();
             return p;
           }),
           py::arg("omega_f") = 1.0, py::arg("omega_a") = 1.0, py::arg("gamma") = 1.0, py::arg("g") = 1.0)
      .def_readonly("omega_f", &models::AtomFieldParams::omega_f)
      .def_readonly("omega_a", &models::AtomFieldParams::omega_a)
      .def_readonly("gamma", &models::AtomFieldParams::gamma)
      .def_readonly("g", &models::AtomFieldParams::g);

  py::class_<models::BECParams>(m, "BECParams")
      .def(py::init([](double omega0, double omega1, double u, double lam) {
             models::BECParams p{omega0, omega1, u, lam};
             p.validate();
             return p;
           }),
           py::arg("omega0") = 1.0, py::arg("omega1") = 1.0, py::arg("u") = 1.0, py::arg("lam") = 1.0)
      .def_readonly("omega0", &models::BECParams::omega0)
      .def_readonly("omega1", &models::BECParams::omega1)
      .def_readonly("u", &models::BECParams::u)
      .def_readonly("lam", &models::BECParams::lam);

  py::class_<models::BlockHamiltonian>(m, "Hamiltonian")
      .def_property_readonly("n_max", &models::BlockHamiltonian::n_max)
      .def("energy", &models::BlockHamiltonian::energy, py::arg("state"));

  m.def("build_hamiltonian_af", &models::build_hamiltonian_af, py::arg("params"), py::arg("n_max"));
  m.def("build_hamiltonian_bec", &models::build_hamiltonian_bec, py::arg("params"), py::arg("n_max"));
  m.def("coherent_state", &models::coherent_state, py::arg("alpha"), py::arg("cutoff"));
  m.def("pacs_state", &models::pacs_state, py::arg("alpha"), py::arg("m"), py::arg("cutoff"));
  m.def("binomial_state", &models::binomial_state, py::arg("total"), py::arg("cutoff_a"), py::arg("cutoff_b"));
  m.def("two_mode_squeezed", &models::two_mode_squeezed, py::arg("zeta"), py::arg("cutoff_a"),
        py::arg("cutoff_b"));
  m.def("evolve", &models::evolve, py::arg("state"), py::arg("hamiltonian"), py::arg("t"),
        py::call_guard<py::gil_scoped_release>());
  m.def("bec_analytic_state", &models::bec_analytic_state, py::arg("params"), py::arg("alpha_a"),
        py::arg("alpha_b"), py::arg("m1"), py::arg("m2"), py::arg("t"), py::arg("cutoff_a"), py::arg("cutoff_b"));

  py::class_<tomography::QuadratureGrid>(m, "QuadratureGrid")
      .def(py::init<double, int>(), py::arg("x_max") = 8.0, py::arg("n_points") = 257)
      .def_property_readonly("x_max", &tomography::QuadratureGrid::x_max)
      .def_property_readonly("n_points", &tomography::QuadratureGrid::n_points)
      .def_property_readonly("spacing", &tomography::QuadratureGrid::spacing);

  m.def(
      "tomogram",
      [](const BipartiteState& s, double theta_a, double theta_b, const tomography::QuadratureGrid& grid) {
        return tomography::bipartite_tomogram(s, theta_a, theta_b, grid).w;
      },
      py::arg("state"), py::arg("theta_a"), py::arg("theta_b"), py::arg("grid") = tomography::QuadratureGrid::standard(),
      "Joint quadrature density w(x_a, x_b) on the grid");
  m.def("mutual_information", &indicators::mutual_information, py::arg("state"), py::arg("theta_a"),
        py::arg("theta_b"), py::arg("grid") = tomography::QuadratureGrid::standard());
  m.def(
      "indicators",
      [](const BipartiteState& s, double t, int n_a, int n_b, const tomography::QuadratureGrid& grid) {
        indicators::IndicatorRecord r;
        {
          py::gil_scoped_release release;
          r = evaluate(s, t, n_a, n_b, grid);
        }
        return record_dict(r);
      },
      py::arg("state"), py::arg("t") = 0.0, py::arg("n_a") = 5, py::arg("n_b") = 5,
      py::arg("grid") = tomography::QuadratureGrid::standard());

  m.def(
      "estimate_delay", [](std::vector<double> x) { return tseries::estimate_delay({std::move(x), 1.0, "x"}); },
      py::arg("values"));
  m.def(
      "fnn_embedding_dim",
      [](std::vector<double> x, int delay, int max_dim) {
        return tseries::fnn_embedding_dim({std::move(x), 1.0, "x"}, delay, max_dim);
      },
      py::arg("values"), py::arg("delay"), py::arg("max_dim") = 10);
  m.def(
      "local_lyapunov",
      [](std::vector<double> x, int delay, int dim, int L, double dt, int n_init, std::uint64_t seed, int theiler,
         double radius_fraction) {
        const auto emb = tseries::embed({std::move(x), dt, "x"}, delay, dim);
        return tseries::local_lyapunov(emb, L, dt, lyap_options(n_init, seed, theiler, radius_fraction));
      },
      py::arg("values"), py::arg("delay"), py::arg("dim"), py::arg("L"), py::arg("dt") = 1.0,
      py::arg("n_init") = 100, py::arg("seed") = 1, py::arg("theiler") = -1, py::arg("radius_fraction") = 0.2);
  m.def(
      "fit_lambda_inf",
      [](const std::vector<double>& ls, const std::vector<double>& y) {
        const auto f = tseries::fit_lambda_inf(ls, y);
        py::dict d;
        d["lambda_inf"] = f.lambda_inf;
        d["m"] = f.m;
        d["q"] = f.q;
        d["residual"] = f.residual;
        return d;
      },
      py::arg("window_lengths"), py::arg("lambda_l"));
  m.def(
      "power_spectrum",
      [](std::vector<double> x, double dt, double freq_unit) {
        const auto ps = tseries::power_spectrum({std::move(x), dt, "x"}, freq_unit);
        return std::make_pair(ps.freqs, ps.s);
      },
      py::arg("values"), py::arg("dt") = 1.0, py::arg("freq_unit") = 1.0, "Returns (frequencies, power)");
  m.def(
      "analyze",
      [](std::vector<double> x, double dt, std::uint64_t seed, double freq_unit) {
        tseries::PipelineOptions opt;
        opt.freq_unit = freq_unit;
        opt.lyapunov.seed = seed;
        tseries::SeriesReport r;
        {
          py::gil_scoped_release release;
          r = tseries::analyze({std::move(x), dt, "x"}, opt);
        }
        py::dict d;
        d["delay"] = r.delay;
        d["dim"] = r.dim;
        d["fnn"] = r.fnn;
        d["window_lengths"] = r.lyapunov.window_lengths;
        d["lambda_l"] = r.lyapunov.lambda_l;
        d["lambda_inf"] = r.lyapunov.fit.lambda_inf;
        d["m"] = r.lyapunov.fit.m;
        d["q"] = r.lyapunov.fit.q;
        d["residual"] = r.lyapunov.fit.residual;
        d["freqs"] = r.spectrum.freqs;
        d["power"] = r.spectrum.s;
        return d;
      },
      py::arg("values"), py::arg("dt") = 1.0, py::arg("seed") = 1, py::arg("freq_unit") = 1.0);

  py::class_<experiment::ExperimentConfig>(m, "ExperimentConfig")
      .def_readonly("name", &experiment::ExperimentConfig::name)
      .def_readonly("dt", &experiment::ExperimentConfig::dt)
      .def_readwrite("n_steps", &experiment::ExperimentConfig::n_steps)
      .def_readonly("cutoff_a", &experiment::ExperimentConfig::cutoff_a)
      .def_readonly("cutoff_b", &experiment::ExperimentConfig::cutoff_b)
      .def_readonly("seed", &experiment::ExperimentConfig::seed)
      .def("rate", &experiment::ExperimentConfig::rate);

  m.def(
      "load_config",
      [](const std::filesystem::path& path, const std::vector<std::string>& overrides) {
        auto cfg = experiment::load_config(path);
        if (overrides.empty()) return cfg;
        std::ifstream in(path);
        auto doc = nlohmann::json::parse(in);
        for (const auto& o : overrides) experiment::apply_override(doc, o);
        return experiment::parse_config(doc);
      },
      py::arg("path"), py::arg("overrides") = std::vector<std::string>{},
      "Overrides use the CLI form 'key.path=value'");
  m.def(
      "run_indicators",
      [](const experiment::ExperimentConfig& cfg) {
        std::vector<indicators::IndicatorRecord> recs;
        {
          py::gil_scoped_release release;
          recs = experiment::run_indicators(cfg);
        }
        std::map<std::string, std::vector<double>> cols;
        for (const auto& r : recs) {
          cols["t"].push_back(r.t);
          cols["svne"].push_back(r.svne);
          cols["sle"].push_back(r.sle);
          cols["xi_tei"].push_back(r.xi_tei);
          cols["xi_tei_prime"].push_back(r.xi_tei_prime);
          cols["xi_ipr"].push_back(r.xi_ipr);
          cols["d1"].push_back(r.d1);
          cols["d2"].push_back(r.d2);
          cols["d3"].push_back(r.d3);
          cols["delta"].push_back(r.delta_svne_sle);
        }
        return cols;
      },
      py::arg("config"), "Indicator time series as a dict of columns");
}
