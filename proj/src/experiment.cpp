// Copyright 2026 The tomoent Authors
// SPDX-License-Identifier: Apache-2.0

#include "tomoent/experiment.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "tomoent/csv.hpp"
#include "tomoent/errors.hpp"
#include "tomoent/parallel.hpp"

namespace tomoent::experiment {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& key, const std::string& why) {
  throw ConfigError("config key '" + key + "': " + why);
}

double get_number(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.contains(key)) bad(path + key, "missing");
  if (!obj.at(key).is_number()) bad(path + key, "expected a number");
  return obj.at(key).get<double>();
}

double number_or(const json& obj, const std::string& key, double fallback,
                 const std::string& path) {
  return obj.contains(key) ? get_number(obj, key, path) : fallback;
}

int int_or(const json& obj, const std::string& key, int fallback, const std::string& path) {
  if (!obj.contains(key)) return fallback;
  if (!obj.at(key).is_number_integer()) bad(path + key, "expected an integer");
  return obj.at(key).get<int>();
}

cplx complex_or(const json& obj, const std::string& key, cplx fallback, const std::string& path) {
  if (!obj.contains(key)) return fallback;
  const auto& v = obj.at(key);
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
    return {v[0].get<double>(), v[1].get<double>()};
  if (v.is_object() && v.contains("abs")) {
    const double phase = number_or(v, "phase", 0.0, path + key + ".");
    return std::polar(get_number(v, "abs", path + key + "."), phase);
  }
  bad(path + key, "expected a number, [re, im] or {\"abs\", \"phase\"}");
}

StateKind parse_kind(const std::string& s) {
  if (s == "cs") return StateKind::Coherent;
  if (s == "pacs") return StateKind::Pacs;
  if (s == "pacs_product") return StateKind::PacsProduct;
  if (s == "binomial") return StateKind::Binomial;
  if (s == "squeezed") return StateKind::Squeezed;
  bad("initial_state.kind", "unknown kind '" + s + "'");
}

}  // namespace

double ExperimentConfig::rate() const {
  if (model == ModelKind::AtomField) return std::abs(af.g);
  return bec.u > 0.0 ? bec.u : bec.lambda1();
}

void ExperimentConfig::validate() const {
  try {
    if (model == ModelKind::AtomField)
      af.validate();
    else
      bec.validate();
  } catch (const InvalidArgument& e) {
    throw ConfigError(e.what());
  }
  if (!(dt > 0.0)) bad("time.dt", "must be positive");
  if (n_steps < 1) bad("time.steps", "must be >= 1");
  if (cutoff_a < 1 || cutoff_b < 1) bad("cutoffs", "must be >= 1");
  if (angles_a < 1 || angles_b < 1) bad("angles", "need at least one angle per mode");
  if (n_points < 3 || n_points % 2 == 0) bad("grid.n_points", "must be odd and >= 3");
  if (!(x_max > 0.0)) bad("grid.x_max", "must be positive");
  if (initial.m1 < 0 || initial.m2 < 0) bad("initial_state.m", "must be >= 0");
  if (initial.kind == StateKind::Binomial &&
      (initial.total < 0 || initial.total > std::min(cutoff_a, cutoff_b)))
    bad("initial_state.N", "must lie in [0, min(cutoffs)]");
  if (propagator == Propagator::Analytic &&
      (model != ModelKind::Bec ||
       (initial.kind != StateKind::Coherent && initial.kind != StateKind::Pacs &&
        initial.kind != StateKind::PacsProduct)))
    bad("propagator", "the closed form exists only for condensate product states");
}

ExperimentConfig parse_config(const json& doc) {
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  ExperimentConfig c;
  if (doc.contains("name")) c.name = doc.at("name").get<std::string>();

  const std::string model = doc.value("model", "atom_field");
  if (model == "atom_field") {
    c.model = ModelKind::AtomField;
  } else if (model == "bec") {
    c.model = ModelKind::Bec;
  } else {
    bad("model", "expected 'atom_field' or 'bec'");
  }

  const json params = doc.value("params", json::object());
  if (c.model == ModelKind::AtomField) {
    c.af.omega_f = number_or(params, "omega_f", 1.0, "params.");
    c.af.omega_a = number_or(params, "omega_a", 1.0, "params.");
    c.af.gamma = number_or(params, "gamma", 1.0, "params.");
    c.af.g = get_number(params, "g", "params.");
  } else {
    c.bec.omega0 = number_or(params, "omega0", 1.0, "params.");
    c.bec.omega1 = number_or(params, "omega1", 1.0, "params.");
    c.bec.u = number_or(params, "u", 1.0, "params.");
    c.bec.lam = number_or(params, "lambda", 1.0, "params.");
  }

  if (!doc.contains("initial_state")) bad("initial_state", "missing");
  const json& st = doc.at("initial_state");
  c.initial.kind = parse_kind(st.value("kind", "cs"));
  c.initial.alpha = complex_or(st, "alpha", 1.0, "initial_state.");
  c.initial.alpha_b = complex_or(st, "alpha_b", 0.0, "initial_state.");
  c.initial.m1 = int_or(st, "m1", int_or(st, "m", 0, "initial_state."), "initial_state.");
  c.initial.m2 = int_or(st, "m2", 0, "initial_state.");
  c.initial.total = int_or(st, "N", 0, "initial_state.");
  c.initial.zeta = complex_or(st, "zeta", 0.0, "initial_state.");

  if (doc.contains("cutoffs")) {
    const auto& cut = doc.at("cutoffs");
    if (cut.is_number_integer()) {
      c.cutoff_a = c.cutoff_b = cut.get<int>();
    } else if (cut.is_array() && cut.size() == 2) {
      c.cutoff_a = cut[0].get<int>();
      c.cutoff_b = cut[1].get<int>();
    } else {
      bad("cutoffs", "expected an integer or [N_A, N_B]");
    }
  }

  const json time = doc.value("time", json::object());
  if (time.contains("dt") && time.contains("dt_scaled")) bad("time", "give dt or dt_scaled, not both");
  const std::string scale = doc.value("scale", "desk");
  if (scale != "desk" && scale != "full") bad("scale", "expected 'desk' or 'full'");
  if (time.contains("steps")) {
    const auto& steps = time.at("steps");
    if (steps.is_number_integer()) {
      c.n_steps = steps.get<int>();
    } else if (steps.is_object()) {
      c.n_steps = int_or(steps, scale, -1, "time.steps.");
      if (c.n_steps < 0) bad("time.steps." + scale, "missing");
    } else {
      bad("time.steps", "expected an integer or {\"desk\": n, \"full\": n}");
    }
  }

  const json angles = doc.value("angles", json::object());
  c.angles_a = int_or(angles, "n_a", 5, "angles.");
  c.angles_b = int_or(angles, "n_b", 5, "angles.");
  const json grid = doc.value("grid", json::object());
  c.x_max = number_or(grid, "x_max", 8.0, "grid.");
  c.n_points = int_or(grid, "n_points", 257, "grid.");
  if (doc.contains("seed")) c.seed = doc.at("seed").get<std::uint64_t>();
  c.output_dir = doc.value("output_dir", std::string("out/") + c.name);

  const std::string prop = doc.value("propagator", "auto");
  if (prop == "auto") {
    c.propagator = Propagator::Auto;
  } else if (prop == "numeric") {
    c.propagator = Propagator::Numeric;
  } else if (prop == "analytic") {
    c.propagator = Propagator::Analytic;
  } else {
    bad("propagator", "expected 'auto', 'numeric' or 'analytic'");
  }

  const json ts = doc.value("timeseries", json::object());
  c.timeseries.column = ts.value("column", std::string("d1"));
  c.timeseries.max_dim = int_or(ts, "max_dim", 10, "timeseries.");
  c.timeseries.window_count = int_or(ts, "windows", 14, "timeseries.");
  c.timeseries.n_init = int_or(ts, "n_init", 100, "timeseries.");
  c.timeseries.radius_fraction = number_or(ts, "radius_fraction", 0.2, "timeseries.");
  c.timeseries.theiler = int_or(ts, "theiler", -1, "timeseries.");

  // dt_scaled needs the rate, which needs the parameters.
  if (time.contains("dt_scaled")) {
    c.dt = get_number(time, "dt_scaled", "time.") * std::numbers::pi / c.rate();
  } else {
    c.dt = number_or(time, "dt", 0.1, "time.");
  }
  c.validate();
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path.string());
  json doc;
  try {
    doc = json::parse(in, nullptr, true, true);
  } catch (const json::parse_error& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
  return parse_config(doc);
}

void apply_override(json& doc, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0)
    throw ConfigError("override '" + assignment + "' is not of the form key=value");
  const std::string key = assignment.substr(0, eq);
  const std::string raw = assignment.substr(eq + 1);
  json value;
  try {
    value = json::parse(raw);
  } catch (const json::parse_error&) {
    value = raw;
  }
  json* node = &doc;
  std::stringstream ss(key);
  std::string part;
  std::vector<std::string> parts;
  while (std::getline(ss, part, '.')) parts.push_back(part);
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    if (!node->contains(parts[i]) || !(*node)[parts[i]].is_object())
      (*node)[parts[i]] = json::object();
    node = &(*node)[parts[i]];
  }
  (*node)[parts.back()] = value;
}

models::BlockHamiltonian build_hamiltonian(const ExperimentConfig& cfg) {
  const int n_max = std::min(cfg.cutoff_a, cfg.cutoff_b);
  return cfg.model == ModelKind::AtomField ? models::build_hamiltonian_af(cfg.af, n_max)
                                           : models::build_hamiltonian_bec(cfg.bec, n_max);
}

BipartiteState initial_state(const ExperimentConfig& cfg) {
  const auto& s = cfg.initial;
  switch (s.kind) {
    case StateKind::Coherent:
      return BipartiteState::product(models::coherent_state(s.alpha, cfg.cutoff_a),
                                     models::coherent_state(s.alpha_b, cfg.cutoff_b));
    case StateKind::Pacs:
      return BipartiteState::product(models::pacs_state(s.alpha, s.m1, cfg.cutoff_a),
                                     models::coherent_state(s.alpha_b, cfg.cutoff_b));
    case StateKind::PacsProduct:
      return BipartiteState::product(models::pacs_state(s.alpha, s.m1, cfg.cutoff_a),
                                     models::pacs_state(s.alpha_b, s.m2, cfg.cutoff_b));
    case StateKind::Binomial:
      return models::binomial_state(s.total, cfg.cutoff_a, cfg.cutoff_b);
    case StateKind::Squeezed:
      return models::two_mode_squeezed(s.zeta, cfg.cutoff_a, cfg.cutoff_b);
  }
  throw ConfigError("unknown initial state");
}

namespace {

bool use_closed_form(const ExperimentConfig& cfg) {
  if (cfg.propagator == Propagator::Numeric || cfg.model != ModelKind::Bec) return false;
  const auto k = cfg.initial.kind;
  const bool product =
      k == StateKind::Coherent || k == StateKind::Pacs || k == StateKind::PacsProduct;
  return product && (cfg.propagator == Propagator::Analytic || cfg.propagator == Propagator::Auto);
}

}  // namespace

BipartiteState state_at(const ExperimentConfig& cfg, const models::BlockHamiltonian& h,
                        const BipartiteState& psi0, double t) {
  if (use_closed_form(cfg)) {
    const auto& s = cfg.initial;
    const int m2 = s.kind == StateKind::PacsProduct ? s.m2 : 0;
    const int m1 = s.kind == StateKind::Coherent ? 0 : s.m1;
    return models::bec_analytic_state(cfg.bec, s.alpha, s.alpha_b, m1, m2, t, cfg.cutoff_a,
                                      cfg.cutoff_b);
  }
  return models::evolve(psi0, h, t);
}

std::vector<indicators::IndicatorRecord> run_indicators(const ExperimentConfig& cfg) {
  cfg.validate();
  const auto h = build_hamiltonian(cfg);
  const auto psi0 = [&] {
    try {
      return initial_state(cfg);
    } catch (const ConvergenceError& e) {
      throw ConvergenceError(std::string("initial state: ") + e.what());
    }
  }();
  const tomography::QuadratureGrid grid(cfg.x_max, cfg.n_points);
  const indicators::IndicatorEvaluator eval(
      tomography::AngleGrid::equally_spaced(cfg.angles_a, cfg.angles_b), grid, cfg.cutoff_a,
      cfg.cutoff_b);

  std::vector<indicators::IndicatorRecord> out(static_cast<std::size_t>(cfg.n_steps));
  parallel_for(out.size(), [&](std::size_t k) {
    const double t = static_cast<double>(k) * cfg.dt;
    try {
      const auto psi = state_at(cfg, h, psi0, t);
      if (!psi.is_converged()) {
        std::ostringstream os;
        os << "top Fock layer weight " << psi.top_layer_weight() << " exceeds 1e-8";
        throw ConvergenceError(os.str());
      }
      out[k] = eval.evaluate(psi, cfg.scaled_time(t));
    } catch (const ConvergenceError& e) {
      std::ostringstream os;
      os << "time step " << k << " (t = " << t << "): " << e.what();
      throw ConvergenceError(os.str());
    }
  });
  return out;
}

void write_indicator_csv(const std::filesystem::path& path,
                         const std::vector<indicators::IndicatorRecord>& records) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path.string());
  out << indicators::indicator_csv_header() << '\n';
  for (const auto& r : records) out << indicators::indicator_csv_row(r) << '\n';
}

TimeSeriesResult run_timeseries(const std::filesystem::path& csv, const TimeSeriesSpec& spec,
                                double dt, double freq_unit, std::uint64_t seed,
                                const std::filesystem::path& out_dir) {
  const auto table = io::read_csv(csv);
  tseries::TimeSeries ts{table.column(spec.column), dt, spec.column};

  tseries::PipelineOptions opt;
  opt.max_dim = spec.max_dim;
  opt.window_count = spec.window_count;
  opt.freq_unit = freq_unit;
  opt.lyapunov.n_init = spec.n_init;
  opt.lyapunov.seed = seed;
  opt.lyapunov.radius_fraction = spec.radius_fraction;
  opt.lyapunov.theiler = spec.theiler;

  TimeSeriesResult r;
  r.report = tseries::analyze(ts, opt);
  std::filesystem::create_directories(out_dir);
  r.lyapunov_csv = out_dir / "lyapunov.csv";
  r.spectrum_csv = out_dir / "spectrum.csv";
  r.fit_summary = out_dir / "fit.txt";
  io::write_lyapunov_csv(r.lyapunov_csv, r.report.lyapunov);
  io::write_spectrum_csv(r.spectrum_csv, r.report.spectrum);

  const auto& f = r.report.lyapunov.fit;
  std::ostringstream os;
  os.precision(12);
  os << "lambda_inf=" << f.lambda_inf << " m=" << f.m << " q=" << f.q
     << " residual=" << f.residual << " delay=" << r.report.delay << " dim=" << r.report.dim;
  r.summary_line = os.str();
  std::ofstream summary(r.fit_summary);
  summary << r.summary_line << '\n';
  return r;
}

}  // namespace tomoent::experiment
