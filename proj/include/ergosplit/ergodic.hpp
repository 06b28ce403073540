// Copyright (c) 2026 the ergosplit developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "ergosplit/model.hpp"
#include "ergosplit/types.hpp"

namespace ergosplit {

// Long-time-average extrapolation record over geometric averaging horizons.
struct LimitEstimate {
  Vector value;                    // size 1 for scalar estimates
  std::vector<double> r_history;   // strictly increasing horizons
  std::vector<double> residuals;   // ||value(r_k) - value(r_{k-1})||
  bool converged = false;
  double tol = 0.0;

  Complex scalar() const { return value(0); }
  double last_residual() const { return residuals.empty() ? -1.0 : residuals.back(); }
};

// Geometric horizon schedule r_k = r0 * 2^k, k = 0..k_max.
struct Schedule {
  double r0 = 16.0;
  int k_max = 20;
};

struct QuadOptions {
  double h = 1.0 / 64;   // base Simpson step
  int max_refine = 6;    // step halvings allowed while calibrating
};

// Weighting of the long-time average. None is the plain running mean
// (1/r) int_0^r; Parabolic applies the window 6 s (r - s) / r^3, whose
// endpoint zeros push the oscillation leak from 1/(g r) down to ~1/(g r)^2.
// The limit is the same; the taper only changes the approach rate.
enum class MeanTaper { None, Parabolic };

struct CesaroResult {
  Vector value;
  double r = 0.0;
  double h = 0.0;
  double quad_error_estimate = 0.0;  // step-halving Richardson difference
};

// (1/r) * integral_0^r T(s) x ds by composite Simpson with step <= h.
CesaroResult cesaro_mean(const MatrixSemigroup& model, const Vector& x, double r, double h);

// Character-weighted long-time average (1/r) int_0^r e^{-i w s} T(s) x ds
// over the schedule horizons. This realizes the Haar average of the
// character conj(gamma) over the orbit-closure group: for a one-parameter
// semigroup the group average coincides with the weighted Cesaro limit, and
// for bounded matrix models it converges to the spectral component of x at
// the axis eigenvalue i*w (zero when i*w is not in the spectrum).
LimitEstimate weighted_mean(const MatrixSemigroup& model, const Vector& x, double omega,
                            const Schedule& schedule = {}, double tol = 1e-6,
                            const QuadOptions& quad = {}, MeanTaper taper = MeanTaper::None);

// Mean ergodic projection onto the fixed space N(A): the w = 0 average.
LimitEstimate mean_ergodic_projection(const MatrixSemigroup& model, const Vector& x,
                                      const Schedule& schedule = {}, double tol = 1e-6,
                                      const QuadOptions& quad = {});

// (1/T) * integral_0^T |<T(t) x0, probe>| dt by composite Simpson.
double flight_mean(const MatrixSemigroup& model, const Vector& x0, const DualVector& probe,
                   double T, double h = 1.0 / 64);

struct SplitOptions {
  Schedule schedule{16.0, 20};
  double tol = 1e-6;
  QuadOptions quad{};
  MeanTaper taper = MeanTaper::None;
  Schedule flight_schedule{16.0, 10};  // horizons of the zero-mean trace
  std::vector<Vector> extra_probes;    // added to the canonical basis probes
};

// Almost-periodic / flight decomposition x = x_a + x_0 computed by the
// spectral route: x_a sums the character-weighted means over the certified
// unimodular frequencies (ordered reduction, ascending frequency) and
// x_0 = x - x_a. The report carries the zero-mean verification trace for the
// flight part: max over canonical (and extra) probes, primal and dual form,
// of (1/T) int_0^T |pairing| dt on geometric horizons.
struct SplitReport {
  Vector x_a;
  Vector x_0;
  std::vector<double> frequencies;
  std::vector<Vector> components;      // weighted mean per frequency, same order
  std::vector<LimitEstimate> component_estimates;
  double residual_sum = 0.0;           // ||x - x_a - x_0||, zero by construction
  LimitEstimate flight_mean_history;
};

SplitReport jdlg_split(const MatrixSemigroup& model, const Vector& x, const SplitOptions& opt = {});

}  // namespace ergosplit
