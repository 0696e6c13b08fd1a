// Copyright 2026 The tomoent Authors
// SPDX-License-Identifier: Apache-2.0

// tomoent: command-line runner for the indicator and time-series pipelines.

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "tomoent/csv.hpp"
#include "tomoent/errors.hpp"
#include "tomoent/experiment.hpp"
#include "tomoent/fockcore.hpp"
#include "tomoent/indicators.hpp"
#include "tomoent/models.hpp"
#include "tomoent/oracles.hpp"
#include "tomoent/plots.hpp"
#include "tomoent/tomography.hpp"
#include "tomoent/tseries.hpp"

namespace {

namespace fs = std::filesystem;
namespace ex = tomoent::experiment;
using nlohmann::json;

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kConfig = 2,
  kConvergence = 3,
  kDegenerate = 4,
};

struct ConfigFlags {
  std::string path;
  std::vector<std::string> overrides;
  std::string scale;
  std::optional<int> steps;
  std::string out;
};

void add_config_flags(CLI::App* cmd, ConfigFlags& f, bool required) {
  auto* opt = cmd->add_option("-c,--config", f.path, "JSON experiment config");
  if (required) opt->required();
  opt->check(CLI::ExistingFile);
  cmd->add_option("--set", f.overrides, "Override a config key, e.g. --set params.g=0.2");
  cmd->add_option("--scale", f.scale, "desk or full")->check(CLI::IsMember({"desk", "full"}));
  cmd->add_option("--steps", f.steps, "Number of time steps");
  cmd->add_option("-o,--out", f.out, "Output directory");
}

ex::ExperimentConfig load(const ConfigFlags& f) {
  std::ifstream in(f.path);
  if (!in) throw tomoent::ConfigError("cannot open config " + f.path);
  json doc;
  try {
    doc = json::parse(in, nullptr, true, true);
  } catch (const json::parse_error& e) {
    throw tomoent::ConfigError(f.path + ": " + e.what());
  }
  for (const auto& o : f.overrides) ex::apply_override(doc, o);
  if (!f.scale.empty()) doc["scale"] = f.scale;
  if (f.steps) {
    if (!doc.contains("time") || !doc["time"].is_object()) doc["time"] = json::object();
    doc["time"]["steps"] = *f.steps;
  }
  if (!f.out.empty()) doc["output_dir"] = f.out;
  return ex::parse_config(doc);
}

int evolve_indicators(const ConfigFlags& f) {
  const auto cfg = load(f);
  const auto records = ex::run_indicators(cfg);
  const fs::path csv = cfg.output_dir / "indicators.csv";
  ex::write_indicator_csv(csv, records);
  std::cout << "wrote " << records.size() << " records to " << csv.string() << '\n';
  return kOk;
}

struct SeriesFlags {
  std::string csv;
  std::string column = "d1";
  std::optional<double> dt;
  std::optional<double> freq_unit;
  std::optional<std::uint64_t> seed;
};

void add_series_flags(CLI::App* cmd, SeriesFlags& s) {
  cmd->add_option("--csv", s.csv, "Indicator CSV")->required();
  cmd->add_option("--column", s.column, "Column to analyze");
  cmd->add_option("--dt", s.dt, "Sampling step in units of time");
  cmd->add_option("--freq-unit", s.freq_unit, "Divides reported frequencies (g or U)");
  cmd->add_option("--seed", s.seed, "Base-point seed");
}

// Resolves the sampling step and frequency unit: explicit flags win, then the
// config, then the CSV's scaled time axis with unit 1.
void resolve_axis(const SeriesFlags& s, const std::optional<ex::ExperimentConfig>& cfg,
                  double& dt, double& unit) {
  if (cfg) {
    dt = cfg->dt;
    unit = cfg->rate();
  } else {
    const auto table = tomoent::io::read_csv(s.csv);
    const auto& t = table.column("t");
    dt = t.size() > 1 && t[1] > t[0] ? t[1] - t[0] : 1.0;
    unit = 1.0;
  }
  if (s.dt) dt = *s.dt;
  if (s.freq_unit) unit = *s.freq_unit;
}

int timeseries(const SeriesFlags& s, const ConfigFlags& f) {
  std::optional<ex::ExperimentConfig> cfg;
  if (!f.path.empty()) cfg = load(f);
  double dt = 1.0;
  double unit = 1.0;
  resolve_axis(s, cfg, dt, unit);
  ex::TimeSeriesSpec spec = cfg ? cfg->timeseries : ex::TimeSeriesSpec{};
  spec.column = s.column;
  const fs::path out = !f.out.empty() ? fs::path(f.out)
                       : cfg          ? cfg->output_dir
                                      : fs::path(s.csv).parent_path();
  const auto r = ex::run_timeseries(s.csv, spec, dt, unit, s.seed.value_or(cfg ? cfg->seed : 1), out);
  std::cout << r.summary_line << '\n';
  return kOk;
}

int spectrum(const SeriesFlags& s, const ConfigFlags& f) {
  std::optional<ex::ExperimentConfig> cfg;
  if (!f.path.empty()) cfg = load(f);
  double dt = 1.0;
  double unit = 1.0;
  resolve_axis(s, cfg, dt, unit);
  const auto table = tomoent::io::read_csv(s.csv);
  const tomoent::tseries::TimeSeries ts{table.column(s.column), dt, s.column};
  const fs::path out = !f.out.empty() ? fs::path(f.out)
                       : cfg          ? cfg->output_dir
                                      : fs::path(s.csv).parent_path();
  fs::create_directories(out);
  tomoent::io::write_spectrum_csv(out / "spectrum.csv",
                                  tomoent::tseries::power_spectrum(ts, unit));
  std::cout << "wrote " << (out / "spectrum.csv").string() << '\n';
  return kOk;
}

int plots(const std::vector<std::string>& csvs, const std::string& out,
          const std::string& time_label, const std::string& freq_label) {
  std::vector<fs::path> paths(csvs.begin(), csvs.end());
  const fs::path dir = out.empty() ? paths.front().parent_path() : fs::path(out);
  for (const auto& p : tomoent::plots::emit_plots(paths, dir, time_label, freq_label))
    std::cout << "wrote " << p.string() << '\n';
  return kOk;
}

int validate() {
  using namespace tomoent;
  namespace orc = tomoent::oracles;
  std::vector<orc::Check> checks;

  for (double r : {0.1, 0.5, 0.7}) {
    const auto psi = models::two_mode_squeezed(r, 40, 40);
    const auto rho = partial_trace(psi, Subsystem::A);
    checks.push_back({"squeezed svne r=" + std::to_string(r), orc::squeezed_svne(r), svne(rho),
                      1e-6});
    checks.push_back({"squeezed sle r=" + std::to_string(r), orc::squeezed_sle(r), sle(rho),
                      1e-6});
  }

  const tomography::QuadratureGrid grid = tomography::QuadratureGrid::standard();
  const BipartiteState vac(4, 4);
  const auto tom = tomography::bipartite_tomogram(vac, 0.0, 0.0, grid);
  const auto red = tomography::reduced_tomogram(tom, Subsystem::A);
  checks.push_back({"vacuum quadrature entropy", orc::vacuum_quadrature_entropy(),
                    indicators::subsystem_tomographic_entropy(red), 1e-6});
  checks.push_back({"vacuum eta_sub", orc::vacuum_eta_sub(), indicators::eta_sub(red), 1e-7});
  checks.push_back({"vacuum eta_ab", orc::vacuum_eta_ab(), indicators::eta_ab(tom), 1e-7});

  const auto sq = models::two_mode_squeezed(0.5, 40, 40);
  checks.push_back({"squeezed gaussian MI", orc::squeezed_gaussian_mi(0.5, 0.0, 0.0, 0.0),
                    indicators::mutual_information(sq, 0.0, 0.0, grid), 1e-4});

  const models::AtomFieldParams af{1.0, 1.0, 0.0, 1.0};
  const auto h = models::build_hamiltonian_af(af, 4);
  const auto psi = models::evolve(BipartiteState::basis(1, 0, 4, 4), h, 0.7);
  checks.push_back({"resonant exchange population", orc::rabi_population(1.0, 0.7),
                    std::norm(psi(1, 0)), 1e-10});

  const cplx a(0.6, -0.3);
  const cplx b(-0.2, 0.5);
  const auto ca = models::coherent_state(a, 40);
  const auto cb = models::coherent_state(b, 40);
  checks.push_back({"coherent overlap", orc::coherent_overlap_squared(a, b),
                    std::norm(ca.dot(cb)), 1e-10});

  const tseries::TimeSeries logistic{orc::logistic_series(5000), 1.0, "x"};
  const auto rep = tseries::analyze(logistic);
  checks.push_back({"logistic lambda_inf", orc::logistic_exponent(),
                    rep.lyapunov.fit.lambda_inf, 0.1 * orc::logistic_exponent()});

  int failed = 0;
  for (const auto& c : checks) {
    std::cout << (c.pass() ? "PASS " : "FAIL ") << c.name << ": expected " << c.expected
              << " got " << c.actual << " (tol " << c.tolerance << ")\n";
    if (!c.pass()) ++failed;
  }
  std::cout << checks.size() - failed << "/" << checks.size() << " oracle checks passed\n";
  return failed ? kFailure : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tomographic entanglement indicators and time-series analysis"};
  app.require_subcommand(1);

  ConfigFlags evolve_flags;
  auto* evolve_cmd = app.add_subcommand("evolve-indicators", "Evolve a config and write indicators.csv");
  add_config_flags(evolve_cmd, evolve_flags, true);

  ConfigFlags ts_flags;
  SeriesFlags ts_series;
  auto* ts_cmd = app.add_subcommand("timeseries", "Delay, embedding, Lyapunov fit and spectrum of a column");
  add_config_flags(ts_cmd, ts_flags, false);
  add_series_flags(ts_cmd, ts_series);

  ConfigFlags sp_flags;
  SeriesFlags sp_series;
  auto* sp_cmd = app.add_subcommand("spectrum", "Power spectrum of a column");
  add_config_flags(sp_cmd, sp_flags, false);
  add_series_flags(sp_cmd, sp_series);

  std::vector<std::string> plot_csvs;
  std::string plot_out;
  std::string time_label = "g t / pi";
  std::string freq_label = "f / g";
  auto* plot_cmd = app.add_subcommand("plots", "Emit matplotlib scripts for CSV artifacts");
  plot_cmd->add_option("csv", plot_csvs, "CSV files")->required();
  plot_cmd->add_option("-o,--out", plot_out, "Directory for the scripts");
  plot_cmd->add_option("--time-label", time_label, "Indicator time-axis label");
  plot_cmd->add_option("--freq-label", freq_label, "Spectrum frequency-axis label");

  auto* validate_cmd = app.add_subcommand("validate", "Check the numerics against closed-form oracles");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfig;
  }

  try {
    if (*evolve_cmd) return evolve_indicators(evolve_flags);
    if (*ts_cmd) return timeseries(ts_series, ts_flags);
    if (*sp_cmd) return spectrum(sp_series, sp_flags);
    if (*plot_cmd) return plots(plot_csvs, plot_out, time_label, freq_label);
    if (*validate_cmd) return validate();
  } catch (const tomoent::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfig;
  } catch (const tomoent::InvalidArgument& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return kConfig;
  } catch (const tomoent::ConvergenceError& e) {
    std::cerr << "not converged: " << e.what() << '\n';
    return kConvergence;
  } catch (const tomoent::NormalizationError& e) {
    std::cerr << "not converged: " << e.what() << '\n';
    return kConvergence;
  } catch (const tomoent::DegenerateSeriesError& e) {
    std::cerr << "degenerate series: " << e.what() << '\n';
    return kDegenerate;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kFailure;
}
