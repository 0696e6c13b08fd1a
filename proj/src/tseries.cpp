// Copyright 2026 The tomoent Authors
// SPDX-License-Identifier: Apache-2.0

#include "tomoent/tseries.hpp"

#include <algorithm>
#include <boost/math/tools/minima.hpp>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>
#include <unsupported/Eigen/FFT>

#include "tomoent/errors.hpp"
#include "tomoent/parallel.hpp"

namespace tomoent::tseries {

namespace {

constexpr std::size_t kMinEmbeddingLength = 1000;

void require_length(const TimeSeries& ts, const char* what) {
  if (ts.size() < kMinEmbeddingLength) {
    std::ostringstream os;
    os << what << ": series has " << ts.size() << " points, need at least "
       << kMinEmbeddingLength;
    throw DegenerateSeriesError(os.str());
  }
}

void require_finite(std::span<const double> x, const char* what) {
  for (double v : x)
    if (!std::isfinite(v)) throw InvalidArgument(std::string(what) + ": non-finite sample");
}

double mean_of(std::span<const double> x) {
  return std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
}

double stddev_of(std::span<const double> x) {
  const double mu = mean_of(x);
  double s = 0.0;
  for (double v : x) s += (v - mu) * (v - mu);
  return std::sqrt(s / static_cast<double>(x.size()));
}

}  // namespace

DelayEmbedding embed(const TimeSeries& ts, int delay, int dim) {
  if (delay < 1 || dim < 1) throw InvalidArgument("embed: delay and dim must be >= 1");
  const long count = static_cast<long>(ts.size()) - static_cast<long>(dim - 1) * delay;
  if (count < 1) throw DegenerateSeriesError("embed: series too short for the embedding");
  DelayEmbedding e;
  e.delay = delay;
  e.dim = dim;
  e.vectors.resize(count, dim);
  for (long i = 0; i < count; ++i)
    for (int d = 0; d < dim; ++d) e.vectors(i, d) = ts.values[i + static_cast<long>(d) * delay];
  return e;
}

std::vector<double> lagged_mutual_information(std::span<const double> x, int max_lag, int bins) {
  if (bins < 2) throw InvalidArgument("lagged_mutual_information: need >= 2 bins");
  if (max_lag < 0 || static_cast<std::size_t>(max_lag) >= x.size())
    throw InvalidArgument("lagged_mutual_information: lag out of range");
  const auto [mn_it, mx_it] = std::minmax_element(x.begin(), x.end());
  const double mn = *mn_it;
  const double span = *mx_it - mn;
  if (!(span > 0.0)) throw DegenerateSeriesError("lagged_mutual_information: constant series");
  std::vector<int> cell(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    cell[i] = std::min(bins - 1, static_cast<int>((x[i] - mn) / span * bins));

  std::vector<double> mi(static_cast<std::size_t>(max_lag) + 1);
  std::vector<double> joint(static_cast<std::size_t>(bins * bins));
  std::vector<double> pa(bins), pb(bins);
  for (int lag = 0; lag <= max_lag; ++lag) {
    std::fill(joint.begin(), joint.end(), 0.0);
    std::fill(pa.begin(), pa.end(), 0.0);
    std::fill(pb.begin(), pb.end(), 0.0);
    const std::size_t n = x.size() - lag;
    for (std::size_t t = 0; t < n; ++t) {
      joint[cell[t] * bins + cell[t + lag]] += 1.0;
      pa[cell[t]] += 1.0;
      pb[cell[t + lag]] += 1.0;
    }
    double s = 0.0;
    const double inv = 1.0 / static_cast<double>(n);
    for (int a = 0; a < bins; ++a)
      for (int b = 0; b < bins; ++b) {
        const double pj = joint[a * bins + b] * inv;
        if (pj > 0.0) s += pj * std::log(pj / (pa[a] * inv * pb[b] * inv));
      }
    mi[lag] = s;
  }
  return mi;
}

std::vector<double> autocorrelation(std::span<const double> x, int max_lag) {
  if (max_lag < 0 || static_cast<std::size_t>(max_lag) >= x.size())
    throw InvalidArgument("autocorrelation: lag out of range");
  const double mu = mean_of(x);
  double var = 0.0;
  for (double v : x) var += (v - mu) * (v - mu);
  if (!(var > 0.0)) throw DegenerateSeriesError("autocorrelation: constant series");
  std::vector<double> ac(static_cast<std::size_t>(max_lag) + 1);
  for (int lag = 0; lag <= max_lag; ++lag) {
    double s = 0.0;
    for (std::size_t t = 0; t + lag < x.size(); ++t) s += (x[t] - mu) * (x[t + lag] - mu);
    ac[lag] = s / var;
  }
  return ac;
}

int estimate_delay(const TimeSeries& ts) {
  require_length(ts, "estimate_delay");
  require_finite(ts.values, "estimate_delay");
  const auto [mn, mx] = std::minmax_element(ts.values.begin(), ts.values.end());
  if (!(*mx > *mn)) throw DegenerateSeriesError("estimate_delay: constant series");

  const int max_lag = static_cast<int>(std::min<std::size_t>(ts.size() / 10, 1000));
  const auto mi = lagged_mutual_information(ts.values, max_lag);
  // Centre of the first trough: lags near the running minimum, before the
  // curve climbs a quarter of its total drop above it.
  const double floor = *std::min_element(mi.begin(), mi.end());
  const double rise = 0.25 * (mi[0] - floor);
  double run_min = mi[0];
  int end = -1;
  for (int lag = 1; lag <= max_lag; ++lag) {
    if (mi[lag] < run_min) {
      run_min = mi[lag];
    } else if (mi[lag] >= run_min + rise) {
      end = lag;
      break;
    }
  }
  if (end > 0) {
    const double near = run_min + 0.5 * rise;
    int first = -1;
    int last = -1;
    for (int lag = 1; lag < end; ++lag)
      if (mi[lag] <= near) {
        if (first < 0) first = lag;
        last = lag;
      }
    return std::max(1, (first + last) / 2);
  }
  const auto ac = autocorrelation(ts.values, max_lag);
  for (int lag = 1; lag <= max_lag; ++lag)
    if (ac[lag] <= std::exp(-1.0)) return lag;
  std::ostringstream os;
  os << "estimate_delay: no mutual-information minimum and no 1/e autocorrelation "
        "crossing within "
     << max_lag << " lags";
  throw DegenerateSeriesError(os.str());
}

std::vector<double> fnn_fractions(const TimeSeries& ts, int delay, int max_dim) {
  require_length(ts, "fnn_fractions");
  require_finite(ts.values, "fnn_fractions");
  if (delay < 1 || max_dim < 1) throw InvalidArgument("fnn_fractions: bad delay or max_dim");
  const double attractor = stddev_of(ts.values);
  if (!(attractor > 0.0)) throw DegenerateSeriesError("fnn_fractions: constant series");
  constexpr double kRatio = 10.0;
  constexpr double kAttractor = 2.0;
  // Neighbors closer than this are repeats of the same state, not neighbors.
  const double duplicate = 1e-9 * attractor;

  std::vector<double> out;
  for (int dim = 1; dim <= max_dim; ++dim) {
    const long count = static_cast<long>(ts.size()) - static_cast<long>(dim) * delay;
    if (count < 2) break;
    PointMatrix pts(count, dim);
    for (long i = 0; i < count; ++i)
      for (int d = 0; d < dim; ++d) pts(i, d) = ts.values[i + static_cast<long>(d) * delay];
    const KdTree tree(pts);
    long checked = 0;
    long false_nn = 0;
    for (long i = 0; i < count; ++i) {
      const auto hit = tree.nearest(pts.row(i).data(), static_cast<int>(i),
                                    static_cast<int>(i), duplicate);
      if (hit.index < 0) continue;
      const double extra = std::abs(ts.values[i + static_cast<long>(dim) * delay] -
                                    ts.values[hit.index + static_cast<long>(dim) * delay]);
      const double extended = std::hypot(hit.distance, extra);
      ++checked;
      if (extra / hit.distance > kRatio || extended / attractor > kAttractor) ++false_nn;
    }
    out.push_back(checked ? static_cast<double>(false_nn) / checked : 1.0);
  }
  return out;
}

namespace {

int first_passing_dim(const std::vector<double>& frac) {
  for (std::size_t d = 0; d < frac.size(); ++d)
    if (frac[d] < 0.01) return static_cast<int>(d) + 1;
  std::ostringstream os;
  os << "fnn_embedding_dim: false-neighbor fraction never drops below 1% up to dim "
     << frac.size() << "; curve:";
  for (double f : frac) os << ' ' << f;
  throw DegenerateSeriesError(os.str());
}

}  // namespace

int fnn_embedding_dim(const TimeSeries& ts, int delay, int max_dim) {
  return first_passing_dim(fnn_fractions(ts, delay, max_dim));
}

double local_lyapunov(const DelayEmbedding& emb, int L, double dt, const LyapunovOptions& opt) {
  if (L < 1) throw InvalidArgument("local_lyapunov: L must be >= 1");
  if (!(dt > 0.0)) throw InvalidArgument("local_lyapunov: dt must be positive");
  if (opt.n_init < 1) throw InvalidArgument("local_lyapunov: n_init must be >= 1");
  const int tau = emb.delay;
  const int count = emb.count();
  // Points that have a successor one embedding step later.
  const int searchable = count - tau;
  const int last_base = count - 1 - L * tau;
  if (searchable < 2 || last_base + 1 < opt.n_init) {
    std::ostringstream os;
    os << "local_lyapunov: " << count << " embedded points cannot host " << opt.n_init
       << " base points over L = " << L << " steps";
    throw DegenerateSeriesError(os.str());
  }
  const int theiler = opt.theiler < 0 ? 2 * tau : opt.theiler;

  const auto& v = emb.vectors;
  const double range = v.col(0).maxCoeff() - v.col(0).minCoeff();
  if (!(range > 0.0)) throw DegenerateSeriesError("local_lyapunov: constant series");
  const double radius = opt.radius_fraction * range * std::sqrt(static_cast<double>(emb.dim));
  const double duplicate = 1e-9 * range;

  const PointMatrix head = v.topRows(searchable);
  const KdTree tree(head);

  // Base points without replacement.
  std::vector<int> candidates(static_cast<std::size_t>(last_base) + 1);
  std::iota(candidates.begin(), candidates.end(), 0);
  std::mt19937_64 rng(opt.seed);
  for (int k = 0; k < opt.n_init; ++k) {
    std::uniform_int_distribution<int> pick(k, last_base);
    std::swap(candidates[k], candidates[pick(rng)]);
  }

  std::vector<double> per_base(static_cast<std::size_t>(opt.n_init));
  parallel_for(per_base.size(), [&](std::size_t k) {
    int f = candidates[k];
    double sum = 0.0;
    for (int step = 0; step < L; ++step, f += tau) {
      const auto hit = tree.nearest(v.row(f).data(), f - theiler, f + theiler, duplicate);
      if (hit.index < 0 || hit.distance > radius) {
        std::ostringstream os;
        os << "local_lyapunov: no neighbor of point " << f << " within search radius "
           << radius << " (Theiler window " << theiler << ")";
        throw DegenerateSeriesError(os.str());
      }
      const double after = (v.row(f + tau) - v.row(hit.index + tau)).norm();
      sum += std::log(after / hit.distance);
    }
    per_base[k] = sum / (static_cast<double>(L) * tau * dt);
  });
  double total = 0.0;
  for (double x : per_base) total += x;
  return total / opt.n_init;
}

namespace {

struct LinearFit {
  double lambda_inf;
  double m;
  double sse;
};

LinearFit solve_at(std::span<const double> ls, std::span<const double> y, double q) {
  const std::size_t n = ls.size();
  Eigen::MatrixXd a(n, 2);
  Eigen::VectorXd b(n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, 0) = 1.0;
    a(i, 1) = std::pow(ls[i], -q);
    b(i) = y[i];
  }
  const Eigen::Vector2d x = a.colPivHouseholderQr().solve(b);
  return {x(0), x(1), (a * x - b).squaredNorm()};
}

}  // namespace

PowerLawFit fit_lambda_inf(std::span<const double> window_lengths,
                           std::span<const double> lambda_l) {
  if (window_lengths.size() != lambda_l.size())
    throw InvalidArgument("fit_lambda_inf: length mismatch");
  if (window_lengths.size() < 4) throw InvalidArgument("fit_lambda_inf: need >= 4 points");
  for (double l : window_lengths)
    if (!(l > 0.0)) throw InvalidArgument("fit_lambda_inf: window lengths must be positive");
  const auto [mn, mx] = std::minmax_element(window_lengths.begin(), window_lengths.end());
  if (*mn == *mx) throw DegenerateSeriesError("fit_lambda_inf: all window lengths equal");

  constexpr double q_lo = 0.05;
  constexpr double q_hi = 3.0;
  constexpr int grid = 300;
  auto q_at = [](int i) { return q_lo * std::pow(q_hi / q_lo, static_cast<double>(i) / (grid - 1)); };
  int best = 0;
  double best_sse = std::numeric_limits<double>::infinity();
  for (int i = 0; i < grid; ++i) {
    const double sse = solve_at(window_lengths, lambda_l, q_at(i)).sse;
    if (sse < best_sse) {
      best_sse = sse;
      best = i;
    }
  }
  const double lo = q_at(std::max(0, best - 1));
  const double hi = q_at(std::min(grid - 1, best + 1));
  const auto [q, sse] = boost::math::tools::brent_find_minima(
      [&](double qq) { return solve_at(window_lengths, lambda_l, qq).sse; }, lo, hi, 50);
  const double q_final = sse <= best_sse ? q : q_at(best);
  const auto fit = solve_at(window_lengths, lambda_l, q_final);
  return {fit.lambda_inf, fit.m, q_final,
          std::sqrt(fit.sse / static_cast<double>(window_lengths.size()))};
}

std::vector<int> default_window_lengths(std::size_t length, int delay, int count) {
  if (count < 1 || delay < 1) throw InvalidArgument("default_window_lengths: bad arguments");
  const double lo = 5.0;
  const double hi = std::max(lo + count, static_cast<double>(length) / (20.0 * delay));
  std::vector<int> out;
  for (int k = 0; k < count; ++k) {
    const double frac = count == 1 ? 0.0 : static_cast<double>(k) / (count - 1);
    int v = static_cast<int>(std::lround(lo * std::pow(hi / lo, frac)));
    if (!out.empty()) v = std::max(v, out.back() + 1);
    out.push_back(v);
  }
  return out;
}

LyapunovEstimate lyapunov_analysis(const DelayEmbedding& emb, double dt,
                                   const std::vector<int>& window_lengths,
                                   const LyapunovOptions& opt) {
  if (!std::is_sorted(window_lengths.begin(), window_lengths.end()) ||
      std::adjacent_find(window_lengths.begin(), window_lengths.end()) != window_lengths.end())
    throw InvalidArgument("lyapunov_analysis: window lengths must be strictly increasing");
  LyapunovEstimate est;
  est.window_lengths = window_lengths;
  std::vector<double> ls;
  for (int L : window_lengths) {
    est.lambda_l.push_back(local_lyapunov(emb, L, dt, opt));
    ls.push_back(L);
  }
  est.fit = fit_lambda_inf(ls, est.lambda_l);
  return est;
}

PowerSpectrum power_spectrum(const TimeSeries& ts, double freq_unit) {
  const std::size_t n = ts.size();
  if (n < 2) throw InvalidArgument("power_spectrum: need >= 2 samples");
  if (!(freq_unit > 0.0) || !(ts.dt > 0.0))
    throw InvalidArgument("power_spectrum: dt and freq_unit must be positive");
  require_finite(ts.values, "power_spectrum");
  const double mu = mean_of(ts.values);
  std::vector<double> x(ts.values.begin(), ts.values.end());
  for (double& v : x) v -= mu;

  Eigen::FFT<double> fft;
  std::vector<std::complex<double>> spec;
  fft.fwd(spec, x);

  PowerSpectrum ps;
  const std::size_t half = n / 2;
  const double nn = static_cast<double>(n);
  for (std::size_t k = 0; k <= half; ++k) {
    const double p = std::norm(spec[k]) / (nn * nn);
    const bool paired = k != 0 && !(n % 2 == 0 && k == half);
    ps.freqs.push_back(static_cast<double>(k) / (nn * ts.dt) / freq_unit);
    ps.s.push_back(paired ? 2.0 * p : p);
  }
  return ps;
}

SeriesReport analyze(const TimeSeries& ts, const PipelineOptions& opt) {
  SeriesReport r;
  r.delay = estimate_delay(ts);
  r.fnn = fnn_fractions(ts, r.delay, opt.max_dim);
  r.dim = first_passing_dim(r.fnn);
  const auto emb = embed(ts, r.delay, r.dim);
  r.lyapunov = lyapunov_analysis(emb, ts.dt,
                                 default_window_lengths(ts.size(), r.delay, opt.window_count),
                                 opt.lyapunov);
  r.spectrum = power_spectrum(ts, opt.freq_unit);
  return r;
}

}  // namespace tomoent::tseries
