// Copyright 2026 The tomoent Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tomoent/csv.hpp"
#include "tomoent/experiment.hpp"
#include "tomoent/fockcore.hpp"
#include "tomoent/indicators.hpp"
#include "tomoent/models.hpp"
#include "tomoent/oracles.hpp"
#include "tomoent/tomography.hpp"
#include "tomoent/tseries.hpp"

namespace {

using namespace tomoent;
namespace fs = std::filesystem;
namespace ex = tomoent::experiment;
using std::numbers::pi;

// Pinned tolerances.
constexpr double kPropagatorFidelity = 1e-7;
constexpr double kPropagatorSeconds = 60.0;
constexpr double kSqueezedSvneTol = 1e-6;
constexpr double kTomogramNormTol = 1e-6;
constexpr double kVacuumEntropyTol = 1e-6;
constexpr double kVacuumEtaTol = 1e-7;
constexpr double kProductNullTol = 1e-6;
constexpr double kOrderingSeconds = 600.0;
constexpr double kGaussianMiTol = 1e-4;
constexpr double kLogisticLo = 0.62;
constexpr double kLogisticHi = 0.77;
// The sinusoid's exponent is exactly zero; this absorbs finite-sample
// scatter of the estimator around it.
constexpr double kSinusoidZeroTol = 1e-3;
constexpr double kFitTol = 1e-3;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

const fs::path kSource = TOMOENT_SOURCE_DIR;

Outcome analytic_propagator() {
  const models::BECParams p{1.0, 1.0, 1.0, 1.0};
  const auto h = models::build_hamiltonian_bec(p, 40);
  std::mt19937_64 rng(2026);
  std::uniform_real_distribution<double> t_dist(0.0, pi / p.u);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * pi);
  const cplx a = std::polar(1.0, phase(rng));
  const cplx b = std::polar(1.0, phase(rng));
  double worst = 0.0;
  const auto start = std::chrono::steady_clock::now();
  for (int m1 = 0; m1 <= 1; ++m1)
    for (int m2 = 0; m2 <= 1; ++m2) {
      const auto psi0 = BipartiteState::product(models::pacs_state(a, m1, 40), models::pacs_state(b, m2, 40));
      for (int k = 0; k < 10; ++k) {
        const double t = t_dist(rng);
        const auto num = models::evolve(psi0, h, t);
        const auto ana = models::bec_analytic_state(p, a, b, m1, m2, t, 40, 40);
        worst = std::max(worst, 1.0 - std::norm(overlap(num, ana)));
      }
    }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {worst < kPropagatorFidelity && secs < kPropagatorSeconds,
          "max 1-|<num|ana>|^2 = " + fmt(worst) + " (tol " + fmt(kPropagatorFidelity) + "), " + fmt(secs) +
              " s (limit 60 s)"};
}

Outcome squeezed_svne() {
  double worst = 0.0;
  for (double r : {0.1, 0.5, 0.7}) {
    const auto rho = partial_trace(models::two_mode_squeezed(r, 40, 40), Subsystem::A);
    worst = std::max(worst, std::abs(svne(rho) - oracles::squeezed_svne(r)));
  }
  return {worst < kSqueezedSvneTol, "max |SVNE - closed form| = " + fmt(worst) + " (tol 1e-6)"};
}

Outcome tomogram_normalization() {
  const auto grid = tomography::QuadratureGrid::standard();
  const auto angles = tomography::AngleGrid::equally_spaced(5, 5);
  const tomography::TomogramEngine engine(grid, 30, 30);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const auto h_af = models::build_hamiltonian_af({1.0, 1.0, 1.0, 100.0}, 30);
  const auto h_bec = models::build_hamiltonian_bec({1.0, 1.0, 1.0, 1.0}, 30);
  double worst = 0.0;
  int count = 0;
  for (int k = 0; k < 10; ++k) {
    BipartiteState psi(30, 30);
    const cplx alpha = std::polar(0.5 + u(rng), 2.0 * pi * u(rng));
    switch (k % 3) {
      case 0:
        psi = models::evolve(BipartiteState::product(models::coherent_state(alpha, 30), models::coherent_state(0.0, 30)),
                             h_af, 10.0 * u(rng));
        break;
      case 1:
        psi = models::evolve(BipartiteState::product(models::pacs_state(alpha, 1, 30), models::coherent_state(alpha, 30)),
                             h_bec, pi * u(rng));
        break;
      default:
        psi = models::evolve(models::two_mode_squeezed(0.3 * u(rng) + 0.1, 30, 30), h_af, 10.0 * u(rng));
    }
    for (double ta : angles.thetas_a())
      for (double tb : angles.thetas_b()) {
        const auto t = engine.bipartite(psi, ta, tb);
        worst = std::max(worst, std::abs(grid.integrate2d(t.w) - 1.0));
        ++count;
      }
  }
  return {worst < kTomogramNormTol && count == 250,
          std::to_string(count) + " tomograms, max |int w - 1| = " + fmt(worst) + " (tol 1e-6)"};
}

Outcome vacuum_oracles() {
  const auto grid = tomography::QuadratureGrid::standard();
  const auto t = tomography::bipartite_tomogram(BipartiteState(4, 4), 0.0, 0.0, grid);
  const auto a = tomography::reduced_tomogram(t, Subsystem::A);
  const double e_s = std::abs(indicators::subsystem_tomographic_entropy(a) - oracles::vacuum_quadrature_entropy());
  const double e_sub = std::abs(indicators::eta_sub(a) - oracles::vacuum_eta_sub());
  const double e_ab = std::abs(indicators::eta_ab(t) - oracles::vacuum_eta_ab());
  return {e_s < kVacuumEntropyTol && e_sub < kVacuumEtaTol && e_ab < kVacuumEtaTol,
          "entropy err " + fmt(e_s) + ", eta_sub err " + fmt(e_sub) + ", eta_AB err " + fmt(e_ab)};
}

Outcome product_nulls() {
  const auto grid = tomography::QuadratureGrid::standard();
  const indicators::IndicatorEvaluator eval(tomography::AngleGrid::equally_spaced(5, 5), grid, 30, 30);
  std::vector<BipartiteState> states;
  states.push_back(BipartiteState::product(models::coherent_state(1.0, 30), models::coherent_state(0.0, 30)));
  for (int m = 1; m <= 5; ++m)
    states.push_back(BipartiteState::product(models::pacs_state(1.0, m, 30), models::coherent_state(0.0, 30)));
  states.push_back(BipartiteState::product(models::pacs_state(1.0, 1, 30), models::pacs_state(1.0, 1, 30)));
  double worst = 0.0;
  for (const auto& psi : states) {
    const auto r = eval.evaluate(psi, 0.0);
    for (double v : {r.svne, r.sle, r.xi_tei, r.xi_tei_prime, r.d1, r.d2}) worst = std::max(worst, std::abs(v));
  }
  return {worst < kProductNullTol,
          std::to_string(states.size()) + " product states, max |indicator| = " + fmt(worst) + " (tol 1e-6)"};
}

Outcome indicator_ordering() {
  auto cfg = ex::load_config(kSource / "configs/af_cs_g100.json");
  cfg.n_steps = 200;
  cfg.cutoff_a = cfg.cutoff_b = 30;
  cfg.angles_a = cfg.angles_b = 5;
  cfg.n_points = 129;
  const auto start = std::chrono::steady_clock::now();
  const auto recs = ex::run_indicators(cfg);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  double d1 = 0.0, d2 = 0.0, delta = 0.0;
  for (const auto& r : recs) {
    d1 += r.d1;
    d2 += r.d2;
    delta += r.delta_svne_sle;
  }
  const double n = static_cast<double>(recs.size());
  d1 /= n;
  d2 /= n;
  delta /= n;
  return {d2 < d1 && d2 < delta && secs < kOrderingSeconds,
          "mean d2 = " + fmt(d2) + ", mean d1 = " + fmt(d1) + ", mean Delta = " + fmt(delta) + ", " + fmt(secs) +
              " s (limit 600 s)"};
}

Outcome gaussian_mi() {
  const auto psi = models::two_mode_squeezed(0.5, 40, 40);
  const double mi = indicators::mutual_information(psi, 0.0, 0.0, tomography::QuadratureGrid::standard());
  const double expect = oracles::squeezed_gaussian_mi(0.5, 0.0, 0.0, 0.0);
  return {std::abs(mi - expect) < kGaussianMiTol,
          "MI = " + fmt(mi) + ", covariance value = " + fmt(expect) + " (tol 1e-4)"};
}

Outcome lyapunov_oracle() {
  const auto logistic = io::read_csv(kSource / "tests/fixtures/logistic.csv");
  const auto rl = tseries::analyze({logistic.column("d1"), 1.0, "logistic"});
  const double lam = rl.lyapunov.fit.lambda_inf;
  const auto rs = tseries::analyze({oracles::sinusoid_series(5000, 50.0), 1.0, "sinusoid"});
  const auto& ls = rs.lyapunov.lambda_l;
  double top3 = -1e300;
  for (std::size_t i = ls.size() - 3; i < ls.size(); ++i) top3 = std::max(top3, ls[i]);
  const bool ok_log = lam >= kLogisticLo && lam <= kLogisticHi;
  const bool ok_sin = top3 <= kSinusoidZeroTol;
  return {ok_log && ok_sin, "logistic Lambda_inf = " + fmt(lam) + " (range [0.62, 0.77]); sinusoid max of last three Lambda_L = " +
                                fmt(top3) + " (<= 0 within " + fmt(kSinusoidZeroTol) + ")"};
}

Outcome fit_recovery() {
  const auto li = tseries::default_window_lengths(20000, 1);
  const std::vector<double> ls(li.begin(), li.end());
  const auto y = oracles::power_law_series(li, 0.2, 1.5, 0.8, 1e-6, 42);
  const auto f = tseries::fit_lambda_inf(ls, y);
  const double err = std::max({std::abs(f.lambda_inf - 0.2), std::abs(f.m - 1.5), std::abs(f.q - 0.8)});
  return {err < kFitTol, "(Lambda_inf, m, q) = (" + fmt(f.lambda_inf) + ", " + fmt(f.m) + ", " + fmt(f.q) +
                             "), max error " + fmt(err) + " (tol 1e-3)"};
}

tseries::SeriesReport d1_report(const std::string& config) {
  const auto cfg = ex::load_config(kSource / "configs" / config);
  const auto recs = ex::run_indicators(cfg);
  std::vector<double> d1;
  d1.reserve(recs.size());
  for (const auto& r : recs) d1.push_back(r.d1);
  tseries::PipelineOptions opt;
  opt.max_dim = cfg.timeseries.max_dim;
  opt.window_count = cfg.timeseries.window_count;
  opt.freq_unit = cfg.rate();
  opt.lyapunov.n_init = cfg.timeseries.n_init;
  opt.lyapunov.seed = cfg.seed;
  opt.lyapunov.radius_fraction = cfg.timeseries.radius_fraction;
  opt.lyapunov.theiler = cfg.timeseries.theiler;
  return tseries::analyze({d1, cfg.dt, "d1"}, opt);
}

Outcome sign_reproduction() {
  const auto weak = d1_report("ts_af_cs_g100.json");
  const auto strong = d1_report("ts_af_cs_g0.2.json");
  const double lam_weak = weak.lyapunov.fit.lambda_inf;
  const double max_strong = *std::max_element(strong.lyapunov.lambda_l.begin(), strong.lyapunov.lambda_l.end());
  return {lam_weak > 0.0 && max_strong < 0.0,
          "gamma/g = 0.01: Lambda_inf = " + fmt(lam_weak) + " (want > 0); gamma/g = 5: max Lambda_L = " +
              fmt(max_strong) + " (want < 0)"};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome determinism() {
  const fs::path root = fs::temp_directory_path() / "tomoent_acceptance_determinism";
  fs::remove_all(root);
  auto cfg = ex::load_config(kSource / "configs/bec_pacs1_w1_l1.json");
  cfg.n_steps = 50;
  std::vector<std::string> files[2];
  for (int run = 0; run < 2; ++run) {
    const fs::path dir = root / std::to_string(run);
    ex::write_indicator_csv(dir / "indicators.csv", ex::run_indicators(cfg));
    ex::run_timeseries(kSource / "tests/fixtures/logistic.csv", {}, 1.0, 1.0, 1, dir);
    for (const char* name : {"indicators.csv", "lyapunov.csv", "spectrum.csv", "fit.txt"})
      files[run].push_back(slurp(dir / name));
  }
  bool same = true;
  for (std::size_t i = 0; i < files[0].size(); ++i) same = same && !files[0][i].empty() && files[0][i] == files[1][i];
  return {same, same ? "indicators, lyapunov, spectrum and fit files byte-identical across two runs"
                     : "outputs differ between runs"};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"C1 analytic propagator equivalence", analytic_propagator},
      {"C2 squeezed-state SVNE", squeezed_svne},
      {"C3 tomogram normalization", tomogram_normalization},
      {"C4 vacuum entropy and IPR oracles", vacuum_oracles},
      {"C5 product-state nulls", product_nulls},
      {"C6 indicator ordering at desk scale", indicator_ordering},
      {"C7 Gaussian mutual information", gaussian_mi},
      {"C8 Lyapunov oracles", lyapunov_oracle},
      {"C9 power-law fit recovery", fit_recovery},
      {"C10 Lyapunov sign reproduction", sign_reproduction},
      {"C11 determinism", determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %s: %s [%.1f s]\n", o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str(), secs);
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
