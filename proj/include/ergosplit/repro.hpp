// Copyright (c) 2026 the ergosplit developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "ergosplit/signal.hpp"
#include "ergosplit/types.hpp"

namespace ergosplit {

// --- building blocks for the counterexample constructions -------------------

// sin(ln(|t| + 1)); even, bounded by 1
double log_sine(double t);

// 4(1/4 - s) on [0, 1/4], zero beyond; domain error for s < 0
double tent_bump(double s);

// sin(pi/8 * log2(|t| + 1)); even, bounded by 1
double binary_log_sine(double t);

// membership of a nonnegative integer in {16^a +- 16^b : b <= a}, decided by
// exact integer decomposition (no floating point)
bool power16_combination(unsigned __int128 k);

// g(t) = sum over members k of the tent bump at |t - k|; at most one term is
// ever active since the tent radius is 1/4
double power16_window_sum(double t);

// h(t) = g(t) * sin(pi/8 * log2(|t| + 1)), bounded by 1
double windowed_binary_log_sine(double t);

// log2(16^p + 16^q + 1), stable for exponents far beyond double-exact range
double log2_two_power_sum(int p, int q);

// Vector bump train: coordinate n (1-based, 2 <= n <= dim) is a plateau bump
// on [2^{2n+1}, 2^{2(n+1)}] with unit end ramps; coordinate 1 is zero.
Eigen::VectorXd bump_coordinates(double t, int dim);

// the functions above packaged as bounded signals; the windowed product
// carries an exact integer evaluation path for 16-power arguments
Signal make_log_sine_signal();
Signal make_binary_log_sine_signal();
Signal make_windowed_binary_log_sine_signal();

// --- reproduction records ----------------------------------------------------

struct ReproEntry {
  std::string label;
  double computed = 0.0;
  double target = 0.0;
  double deviation = 0.0;
};

struct ReproResult {
  std::string claim_id;
  std::vector<ReproEntry> values;
  double tolerance = 0.0;
  double max_deviation = 0.0;
  bool pass = false;
};

// log-sine translates along t_m = exp(2 m pi + pi/2) approach the constant 1
// pointwise: f(s + t_m) in [1 - tol, 1] for every fixed shift s
ReproResult repro_11_2(int m_min = 10, int m_max = 40, double tol = 1e-6);

// the windowed binary-log sine has two unequal iterated limits along
// t_m = 16^m, s_n = 16^{n+1} with stride-4 subsequences: tails 1 and 0
ReproResult repro_11_10(int budget = 15, double tol = 1e-4);

// the bump-train array <g(2^{2n} + 2^{2m+1} + 1), e_m> has iterated limits 1
// and 0, and translate pairings against fixed window probes decay to zero
ReproResult repro_11_11(int truncation = 12, double tol = 1e-3);

}  // namespace ergosplit
