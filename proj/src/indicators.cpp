// Copyright 2026 The tomoent Authors
// SPDX-License-Identifier: Apache-2.0

#include "tomoent/indicators.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "tomoent/errors.hpp"

namespace tomoent::indicators {

namespace {

double neg_w_log_w(double w) { return w > 0.0 ? -w * std::log(w) : 0.0; }

}  // namespace

double joint_tomographic_entropy(const Tomogram& t) {
  return t.grid.integrate2d(t.w.unaryExpr(&neg_w_log_w));
}

double subsystem_tomographic_entropy(const ReducedTomogram& t) {
  return t.grid.integrate(t.w.unaryExpr(&neg_w_log_w));
}

double eta_ab(const Tomogram& t) { return t.grid.integrate2d(t.w.cwiseAbs2()); }

double eta_sub(const ReducedTomogram& t) { return t.grid.integrate(t.w.cwiseAbs2()); }

AngleSample sample_angle_pair(const Tomogram& t) {
  const auto ra = tomography::reduced_tomogram(t, Subsystem::A);
  const auto rb = tomography::reduced_tomogram(t, Subsystem::B);
  AngleSample s;
  s.theta_a = t.theta_a;
  s.theta_b = t.theta_b;
  s.s_joint = joint_tomographic_entropy(t);
  s.s_a = subsystem_tomographic_entropy(ra);
  s.s_b = subsystem_tomographic_entropy(rb);
  s.eta_ab = eta_ab(t);
  s.eta_a = eta_sub(ra);
  s.eta_b = eta_sub(rb);
  return s;
}

double mutual_information(const BipartiteState& state, double theta_a,
                          double theta_b, const QuadratureGrid& grid) {
  return sample_angle_pair(tomography::bipartite_tomogram(state, theta_a, theta_b, grid))
      .mutual_information();
}

double xi_tei_from(const std::vector<double>& mi) {
  if (mi.empty()) throw InvalidArgument("xi_tei: empty angle sample");
  return std::accumulate(mi.begin(), mi.end(), 0.0) / static_cast<double>(mi.size());
}

double xi_tei_prime_from(const std::vector<double>& mi) {
  if (mi.size() < 4) throw InvalidArgument("xi_tei_prime: need at least 4 angle pairs");
  const double mean = xi_tei_from(mi);
  double var = 0.0;
  for (double v : mi) var += (v - mean) * (v - mean);
  const double sd = std::sqrt(var / static_cast<double>(mi.size()));
  if (sd < 1e-12) return mean;
  const double threshold = mean + sd;
  double sum = 0.0;
  std::size_t count = 0;
  for (double v : mi)
    if (v > threshold) {
      sum += v;
      ++count;
    }
  return count == 0 ? mean : sum / static_cast<double>(count);
}

namespace {

std::vector<AngleSample> angle_samples(const BipartiteState& state, const AngleGrid& angles,
                                       const QuadratureGrid& grid) {
  if (!state.is_normalized())
    throw NormalizationError("indicators: state not normalized", 1.0 - state.norm_squared());
  return IndicatorEvaluator(angles, grid, state.cutoff_a(), state.cutoff_b()).samples(state);
}

std::vector<double> mi_values(const std::vector<AngleSample>& s) {
  std::vector<double> mi;
  mi.reserve(s.size());
  for (const auto& a : s) mi.push_back(a.mutual_information());
  return mi;
}

double xi_ipr_from(const std::vector<AngleSample>& s) {
  double acc = 0.0;
  for (const auto& a : s) acc += a.ipr_combination();
  return 1.0 - acc / static_cast<double>(s.size());
}

}  // namespace

double xi_tei(const BipartiteState& state, const AngleGrid& angles,
              const QuadratureGrid& grid) {
  return xi_tei_from(mi_values(angle_samples(state, angles, grid)));
}

double xi_tei_prime(const BipartiteState& state, const AngleGrid& angles,
                    const QuadratureGrid& grid) {
  return xi_tei_prime_from(mi_values(angle_samples(state, angles, grid)));
}

double xi_ipr(const BipartiteState& state, const AngleGrid& angles,
              const QuadratureGrid& grid) {
  return xi_ipr_from(angle_samples(state, angles, grid));
}

int hamming_distance(int m, int n, int p, int q) {
  if (m < 0 || n < 0 || p < 0 || q < 0)
    throw InvalidArgument("hamming_distance: labels must be nonnegative");
  return (m != p ? 1 : 0) + (n != q ? 1 : 0);
}

IndicatorRecord IndicatorRecord::assemble(double t, double svne, double sle,
                                          double xi_tei, double xi_tei_prime,
                                          double xi_ipr) {
  IndicatorRecord r;
  r.t = t;
  r.svne = svne;
  r.sle = sle;
  r.xi_tei = xi_tei;
  r.xi_tei_prime = xi_tei_prime;
  r.xi_ipr = xi_ipr;
  r.d1 = std::abs(svne - xi_tei_prime);
  r.d2 = std::abs(sle - xi_tei_prime);
  r.d3 = std::abs(sle - xi_ipr);
  r.delta_svne_sle = std::abs(svne - sle);
  return r;
}

IndicatorEvaluator::IndicatorEvaluator(AngleGrid angles, const QuadratureGrid& grid,
                                       int cutoff_a, int cutoff_b)
    : angles_(std::move(angles)), engine_(grid, cutoff_a, cutoff_b) {}

std::vector<AngleSample> IndicatorEvaluator::samples(const BipartiteState& state) const {
  const auto& ta = angles_.thetas_a();
  const auto& tb = angles_.thetas_b();
  std::vector<AngleSample> out(angles_.pair_count());
  for (std::size_t i = 0; i < ta.size(); ++i)
    for (std::size_t j = 0; j < tb.size(); ++j)
      out[i * tb.size() + j] = sample_angle_pair(engine_.bipartite(state, ta[i], tb[j]));
  return out;
}

IndicatorRecord IndicatorEvaluator::evaluate(const BipartiteState& state, double t) const {
  const auto rho = partial_trace(state, Subsystem::A);
  const auto s = samples(state);
  const auto mi = mi_values(s);
  return IndicatorRecord::assemble(t, svne(rho), sle(rho), xi_tei_from(mi),
                                   angles_.pair_count() >= 4 ? xi_tei_prime_from(mi)
                                                             : xi_tei_from(mi),
                                   xi_ipr_from(s));
}

IndicatorRecord indicator_record(const BipartiteState& state, double t,
                                 const AngleGrid& angles, const QuadratureGrid& grid) {
  return IndicatorEvaluator(angles, grid, state.cutoff_a(), state.cutoff_b())
      .evaluate(state, t);
}

std::string indicator_csv_header() {
  return "t,svne,sle,xi_tei,xi_tei_prime,xi_ipr,d1,d2,d3,delta";
}

std::string indicator_csv_row(const IndicatorRecord& r) {
  std::ostringstream os;
  os.precision(12);
  os << r.t << ',' << r.svne << ',' << r.sle << ',' << r.xi_tei << ','
     << r.xi_tei_prime << ',' << r.xi_ipr << ',' << r.d1 << ',' << r.d2 << ','
     << r.d3 << ',' << r.delta_svne_sle;
  return os.str();
}

}  // namespace tomoent::indicators
