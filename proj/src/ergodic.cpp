// Copyright (c) 2026 the ergosplit developers
// SPDX-License-Identifier: Apache-2.0

#include "ergosplit/ergodic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ergosplit/expm.hpp"

namespace ergosplit {

namespace {

// unit-modulus weight e^{-i w L}, argument reduced in extended precision so
// horizons of order 1e9 keep ~1e-10 phase accuracy
Complex unit_weight(double omega, double L) {
  const long double phase = fmodl(static_cast<long double>(omega) * static_cast<long double>(L),
                                  2.0L * std::numbers::pi_v<long double>);
  return Complex(static_cast<double>(cosl(phase)), -static_cast<double>(sinl(phase)));
}

// Moment integrals over one horizon: J_p = int_0^L s^p e^{-i w s} e^{sA} ds
// for p = 0, 1, 2. The monomial weights compose across interval doubling, so
// both the plain running mean (J_0 / r) and the parabolic-tapered mean
// 6 (r J_1 - J_2) / r^3 extend dyadically.
struct MomentIntegrals {
  Matrix j0, j1, j2;
};

// Composite Simpson of the three moment integrands over [0, b]; node
// exponentials are chained from a single step.
MomentIntegrals weighted_panel(const Matrix& a, double omega, double b, long panels) {
  if (panels % 2) ++panels;
  const double step = b / static_cast<double>(panels);
  const Matrix estep = expm(a, step);
  const Eigen::Index n = a.rows();

  Matrix node = Matrix::Identity(n, n);
  MomentIntegrals acc{node, Matrix::Zero(n, n), Matrix::Zero(n, n)};  // s = 0 nodes
  for (long k = 1; k <= panels; ++k) {
    node = (estep * node).eval();
    const double s = step * static_cast<double>(k);
    const double w = (k == panels) ? 1.0 : ((k % 2) ? 4.0 : 2.0);
    const Matrix weighted = (w * unit_weight(omega, s)) * node;
    acc.j0 += weighted;
    acc.j1 += s * weighted;
    acc.j2 += (s * s) * weighted;
  }
  acc.j0 *= step / 3.0;
  acc.j1 *= step / 3.0;
  acc.j2 *= step / 3.0;
  return acc;
}

struct DyadicAverages {
  std::vector<double> horizons;
  std::vector<MomentIntegrals> integrals;
};

Vector horizon_value(const DyadicAverages& avg, std::size_t k, const Vector& x,
                     MeanTaper taper) {
  const double r = avg.horizons[k];
  const MomentIntegrals& j = avg.integrals[k];
  if (taper == MeanTaper::Parabolic) return 6.0 * (r * (j.j1 * x) - j.j2 * x) / (r * r * r);
  return j.j0 * x / r;
}

// Base panel [0, b] with b = r0 / 2^m in (0.5, 1], integrated by Simpson with
// step-halving calibration, then extended by the exact doubling identities
//   J_0(2L) = J_0 + wE J_0
//   J_1(2L) = J_1 + wE (L J_0 + J_1)
//   J_2(2L) = J_2 + wE (L^2 J_0 + 2 L J_1 + J_2)
// with wE = e^{-i w L} E(L); every schedule horizon r0 * 2^k is hit exactly.
// Stops early once `stop` says the recorded tail suffices.
template <typename StopFn>
DyadicAverages dyadic_weighted_integrals(const Matrix& a, double omega, const Schedule& sched,
                                         const QuadOptions& quad, double calib_tol, StopFn&& stop) {
  if (!(sched.r0 > 0)) throw std::domain_error("schedule: r0 must be positive");
  if (sched.k_max < 0 || sched.k_max > 40)
    throw std::domain_error("schedule: k_max must be in [0, 40]");

  int m = 0;
  double b = sched.r0;
  while (b > 1.0) {
    b /= 2.0;
    ++m;
  }

  long panels = std::lround(std::ceil(b / quad.h));
  MomentIntegrals j = weighted_panel(a, omega, b, panels);
  for (int refine = 0; refine < quad.max_refine; ++refine) {
    const MomentIntegrals finer = weighted_panel(a, omega, b, panels * 2);
    const double diff = (finer.j0 - j.j0).norm() + (finer.j1 - j.j1).norm() +
                        (finer.j2 - j.j2).norm();
    j = finer;
    panels *= 2;
    if (diff <= calib_tol * std::max(1.0, j.j0.norm())) break;
  }

  Matrix eL = expm(a, b);
  double L = b;
  const auto advance = [&]() {
    const Matrix we = unit_weight(omega, L) * eL;
    const Matrix j2 = j.j2 + we * ((L * L) * j.j0 + (2.0 * L) * j.j1 + j.j2);
    const Matrix j1 = j.j1 + we * (L * j.j0 + j.j1);
    const Matrix j0 = j.j0 + we * j.j0;
    j = {j0, j1, j2};
    eL = (eL * eL).eval();
    L *= 2.0;
  };

  for (int i = 0; i < m; ++i) advance();  // reach r0

  DyadicAverages out;
  out.horizons.push_back(L);
  out.integrals.push_back(j);
  for (int k = 1; k <= sched.k_max; ++k) {
    if (stop(out)) break;
    advance();
    out.horizons.push_back(L);
    out.integrals.push_back(j);
  }
  return out;
}

LimitEstimate estimate_from_averages(const DyadicAverages& avg, const Vector& x, double tol,
                                     MeanTaper taper) {
  LimitEstimate est;
  est.tol = tol;
  std::vector<Vector> values;
  for (std::size_t k = 0; k < avg.horizons.size(); ++k) {
    values.push_back(horizon_value(avg, k, x, taper));
    est.r_history.push_back(avg.horizons[k]);
    if (k > 0) est.residuals.push_back((values[k] - values[k - 1]).norm());
  }
  est.value = values.back();
  const std::size_t nr = est.residuals.size();
  est.converged = nr >= 2 && est.residuals[nr - 1] <= tol && est.residuals[nr - 2] <= tol;
  return est;
}

}  // namespace

CesaroResult cesaro_mean(const MatrixSemigroup& model, const Vector& x, double r, double h) {
  if (!(r > 0)) throw std::domain_error("cesaro_mean: r must be positive");
  if (!(h > 0) || h >= r) throw std::domain_error("cesaro_mean: need 0 < h < r");
  if (x.size() != model.dim()) throw std::invalid_argument("cesaro_mean: dimension mismatch");

  const long panels = std::lround(std::ceil(r / h));
  const Matrix coarse = weighted_panel(model.generator(), 0.0, r, panels).j0;
  const Matrix fine = weighted_panel(model.generator(), 0.0, r, panels * 2).j0;

  CesaroResult res;
  res.value = fine * x / r;
  res.r = r;
  res.h = r / static_cast<double>(panels * 2);
  res.quad_error_estimate = ((fine - coarse) * x).norm() / r;
  return res;
}

LimitEstimate weighted_mean(const MatrixSemigroup& model, const Vector& x, double omega,
                            const Schedule& schedule, double tol, const QuadOptions& quad,
                            MeanTaper taper) {
  if (!std::isfinite(omega)) throw std::domain_error("weighted_mean: omega must be finite");
  if (x.size() != model.dim()) throw std::invalid_argument("weighted_mean: dimension mismatch");

  const auto stop = [&](const DyadicAverages& avg) {
    const std::size_t k = avg.horizons.size();
    if (k < 3) return false;
    const Vector v2 = horizon_value(avg, k - 1, x, taper);
    const Vector v1 = horizon_value(avg, k - 2, x, taper);
    const Vector v0 = horizon_value(avg, k - 3, x, taper);
    return (v2 - v1).norm() <= tol && (v1 - v0).norm() <= tol;
  };
  const DyadicAverages avg =
      dyadic_weighted_integrals(model.generator(), omega, schedule, quad, tol / 10.0, stop);
  return estimate_from_averages(avg, x, tol, taper);
}

LimitEstimate mean_ergodic_projection(const MatrixSemigroup& model, const Vector& x,
                                      const Schedule& schedule, double tol,
                                      const QuadOptions& quad) {
  return weighted_mean(model, x, 0.0, schedule, tol, quad);
}

double flight_mean(const MatrixSemigroup& model, const Vector& x0, const DualVector& probe,
                   double T, double h) {
  if (!(T > 0)) throw std::domain_error("flight_mean: T must be positive");
  if (!(h > 0) || h >= T) throw std::domain_error("flight_mean: need 0 < h < T");
  if (x0.size() != model.dim() || probe.size() != model.dim())
    throw std::invalid_argument("flight_mean: dimension mismatch");

  long panels = std::lround(std::ceil(T / h));
  if (panels % 2) ++panels;
  const double step = T / static_cast<double>(panels);
  const Matrix estep = expm(model.generator(), step);

  Vector u = x0;
  double acc = std::abs(pairing(u, probe));
  for (long k = 1; k <= panels; ++k) {
    u = (estep * u).eval();
    const double w = (k == panels) ? 1.0 : ((k % 2) ? 4.0 : 2.0);
    acc += w * std::abs(pairing(u, probe));
  }
  return acc * step / 3.0 / T;
}

namespace {

// Zero-mean trace of a flight vector: for each schedule horizon, the worst
// Simpson mean of |<e^{tG} v, probe>| over the probe set. The composite rule
// extends across horizon doublings: closing a stretch gives the endpoint
// weight 1, reopening adds 1 more, matching the interior weight 2.
std::vector<double> flight_trace(const Matrix& gen, const Vector& v,
                                 const std::vector<Vector>& probes, const Schedule& sched,
                                 double h) {
  const std::size_t np = probes.size();
  long panels0 = std::lround(std::ceil(sched.r0 / h));
  if (panels0 % 2) ++panels0;
  const double step = sched.r0 / static_cast<double>(panels0);
  const Matrix estep = expm(gen, step);

  Vector u = v;
  std::vector<double> acc(np, 0.0);
  const auto add_node = [&](double w) {
    for (std::size_t p = 0; p < np; ++p) acc[p] += w * std::abs(pairing(u, probes[p]));
  };

  add_node(1.0);
  long node = 0;
  double horizon = sched.r0;
  std::vector<double> means;
  for (int k = 0; k <= sched.k_max; ++k) {
    const long target = panels0 << k;
    while (node < target) {
      ++node;
      u = (estep * u).eval();
      add_node(node == target ? 1.0 : ((node % 2) ? 4.0 : 2.0));
    }
    double worst = 0.0;
    for (std::size_t p = 0; p < np; ++p) worst = std::max(worst, acc[p] * step / 3.0 / horizon);
    means.push_back(worst);
    if (k < sched.k_max) add_node(1.0);
    horizon *= 2.0;
  }
  return means;
}

LimitEstimate estimate_from_means(const std::vector<double>& means, const Schedule& sched,
                                  double tol) {
  LimitEstimate est;
  est.tol = tol;
  est.value = Vector::Constant(1, Complex(means.back(), 0.0));
  for (std::size_t k = 0; k < means.size(); ++k) {
    est.r_history.push_back(sched.r0 * std::ldexp(1.0, static_cast<int>(k)));
    if (k > 0) est.residuals.push_back(std::abs(means[k] - means[k - 1]));
  }
  const std::size_t nr = est.residuals.size();
  est.converged = nr >= 2 && est.residuals[nr - 1] <= tol && est.residuals[nr - 2] <= tol;
  return est;
}

}  // namespace

SplitReport jdlg_split(const MatrixSemigroup& model, const Vector& x, const SplitOptions& opt) {
  if (x.size() != model.dim()) throw std::invalid_argument("jdlg_split: dimension mismatch");

  SplitReport report;
  report.frequencies = model.unimodular_frequencies();

  Vector x_a = Vector::Zero(model.dim());
  for (double w : report.frequencies) {  // ascending order: deterministic reduction
    LimitEstimate est = weighted_mean(model, x, w, opt.schedule, opt.tol, opt.quad, opt.taper);
    x_a += est.value;
    report.components.push_back(est.value);
    report.component_estimates.push_back(std::move(est));
  }
  report.x_a = x_a;
  report.x_0 = x - x_a;
  report.residual_sum = (x - report.x_a - report.x_0).norm();

  std::vector<Vector> probes;
  for (Eigen::Index i = 0; i < model.dim(); ++i) probes.push_back(Vector::Unit(model.dim(), i));
  for (const Vector& p : opt.extra_probes) probes.push_back(p.normalized());

  // primal form: (1/T) int |<e^{tA} x_0, y>| dt over the probe set
  const std::vector<double> primal =
      flight_trace(model.generator(), report.x_0, probes, opt.flight_schedule, opt.quad.h);

  // dual form: split the same coordinates under the adjoint generator, whose
  // axis frequencies are the mirrored ones, and trace |<e^{tA^H} x0_dual, y>|
  const Matrix dual_gen = model.dual_generator();
  Vector xa_dual = Vector::Zero(model.dim());
  {
    MatrixSemigroup dual_model(dual_gen, model.axis_tol());
    for (double w : dual_model.unimodular_frequencies())
      xa_dual += weighted_mean(dual_model, x, w, opt.schedule, opt.tol, opt.quad, opt.taper).value;
  }
  const std::vector<double> dual =
      flight_trace(dual_gen, x - xa_dual, probes, opt.flight_schedule, opt.quad.h);

  std::vector<double> merged(primal.size());
  for (std::size_t k = 0; k < merged.size(); ++k) merged[k] = std::max(primal[k], dual[k]);
  report.flight_mean_history = estimate_from_means(merged, opt.flight_schedule, opt.tol);
  return report;
}

}  // namespace ergosplit
