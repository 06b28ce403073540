// Copyright (c) 2026 the ergosplit developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ergosplit/ergodic.hpp"
#include "ergosplit/sequence_family.hpp"
#include "ergosplit/signal.hpp"

namespace ergosplit {

enum class DoubleLimitVerdict { Consistent, Violation, Inconclusive };

struct TailEntry {
  int outer_index = 0;
  int inner_count = 0;
  bool inner_cauchy = false;
  Complex inner_limit{0, 0};
};

// Numeric probe of the double-limit criterion: a bounded function with
// weakly relatively compact translate orbit has equal iterated limits
// lim_n lim_m f(t_m + s_n) = lim_m lim_n f(t_m + s_n) along any pair of
// index families. Unequal Cauchy tails therefore witness the failure of
// Eberlein weak almost periodicity; anything short of that is inconclusive.
struct DoubleLimitReport {
  std::optional<Complex> nu;   // inner limit over family A, outer over B
  std::optional<Complex> mu;   // inner limit over family B, outer over A
  double discrepancy = 0.0;    // |nu - mu| when both exist
  DoubleLimitVerdict verdict = DoubleLimitVerdict::Inconclusive;
  std::vector<TailEntry> nu_table;
  std::vector<TailEntry> mu_table;
  double tol = 0.0;
  double separation = 0.0;
  std::string detail;
};

struct ProbeOptions {
  double tol = 1e-6;         // Cauchy tolerance for tail acceptance
  double separation = 1e-2;  // discrepancy above this is a violation
  int tail_window = 5;       // limit = mean of the last K accepted terms
  // The inner tail for outer index n starts at inner index n + offset: the
  // concrete stand-in for passing to dominating subnets.
  int inner_index_offset = 5;
};

DoubleLimitReport double_limit_probe(const Signal& signal, const SequenceFamily& fam_a,
                                     const SequenceFamily& fam_b, const ProbeOptions& opt = {});

enum class WapVerdict { ViolationFound, NoViolationFound };

struct WapSearchResult {
  WapVerdict verdict = WapVerdict::NoViolationFound;
  std::optional<std::size_t> pair_index;
  std::optional<DoubleLimitReport> counterexample;
  int pairs_probed = 0;
};

using FamilyBank = std::vector<std::pair<SequenceFamily, SequenceFamily>>;

// Exponential pairs over tau in {0, pi/2, pi, 3pi/2}, the 16-power pair with
// strides 1 and 4, and an integer-by-sqrt(2) arithmetic pair.
FamilyBank default_family_bank();

// First family pair in the bank whose probe reports a violation; exhausting
// the bank yields NoViolationFound, which is evidence, never a proof.
WapSearchResult wap_verdict(const Signal& signal, const FamilyBank& bank, int budget = 64,
                            const ProbeOptions& opt = {});

// Bohr-Fourier coefficient a_w(f) = lim_r (1/r) int_0^r e^{-i w t} f(t) dt
// over geometric horizons, scalar incremental Simpson quadrature.
LimitEstimate bohr_coefficient(const Signal& signal, double omega, const Schedule& schedule = {16.0, 16},
                               double tol = 1e-6, const QuadOptions& quad = {});

struct ApProbeReport {
  std::vector<double> epsilon_periods;
  double max_gap = 0.0;  // includes the leading and trailing gaps
  bool relatively_dense_evidence = false;
  double epsilon = 0.0;
  double horizon = 0.0;
  double gap_bound = 0.0;
};

struct ApProbeOptions {
  double window = 64.0;       // sup-norm comparison window [0, window]
  double sample_step = 1.0 / 16;
  double tau_step = 0.0;      // 0: derived as eps/8
};

// Almost-period search: tau qualifies when sup over the sampled window of
// |f(t + tau) - f(t)| <= eps. Relative density of the found set (max gap
// below the bound) is the computable surrogate for almost periodicity.
ApProbeReport ap_probe(const Signal& signal, double eps, double horizon, double gap_bound,
                       const ApProbeOptions& opt = {});

}  // namespace ergosplit
