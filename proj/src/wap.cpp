// Copyright (c) 2026 the ergosplit developers
// SPDX-License-Identifier: Apache-2.0

#include "ergosplit/wap.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ergosplit/quadrature.hpp"

namespace ergosplit {

namespace {

constexpr double kSumCap = 1e306;
constexpr int kIntExpCap = 30;  // 16^30 fits the exact integer path

// Tail of the inner family for a fixed outer index: values f(t_m + s), only
// over inner indices m >= outer_index + offset, skipping unrepresentable
// sums. 16-power sums use the signal's exact integer path when it has one,
// since the double sum collapses once the exponents differ by more than 13.
struct InnerTail {
  std::vector<Complex> terms;
  int count() const { return static_cast<int>(terms.size()); }
};

InnerTail inner_tail(const Signal& f, const SequenceFamily& inner, const SequenceFamily& outer,
                     int outer_index, int offset) {
  using U = Signal::UInt128;
  const double outer_value = outer.value(outer_index);
  const std::optional<int> outer_exp = outer.power16_exponent(outer_index);
  InnerTail tail;
  for (int m : inner.indices()) {
    if (m < outer_index + offset) continue;
    const std::optional<int> inner_exp = inner.power16_exponent(m);
    if (f.has_integer_eval() && inner_exp && outer_exp && *inner_exp <= kIntExpCap &&
        *outer_exp <= kIntExpCap) {
      const U k = (U(1) << (4 * *inner_exp)) + (U(1) << (4 * *outer_exp));
      tail.terms.push_back(f.eval_integer(k));
      continue;
    }
    const double t = inner.value(m);
    if (t + outer_value > kSumCap) break;
    tail.terms.push_back(f(t + outer_value));
  }
  return tail;
}

// Declared limit of a finite tail: Cauchy once the final two terms differ by
// at most tol; the value is the mean of the last K accepted terms.
std::optional<Complex> tail_limit(const std::vector<Complex>& terms, double tol, int window) {
  if (terms.size() < 2) return std::nullopt;
  const std::size_t n = terms.size();
  if (std::abs(terms[n - 1] - terms[n - 2]) > tol) return std::nullopt;
  const std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(window), n);
  Complex acc(0, 0);
  for (std::size_t i = n - k; i < n; ++i) acc += terms[i];
  return acc / static_cast<double>(k);
}

// One iterated-limit order: inner over `inner`, outer over `outer`.
std::pair<std::optional<Complex>, std::vector<TailEntry>> iterated_limit(
    const Signal& f, const SequenceFamily& inner, const SequenceFamily& outer,
    const ProbeOptions& opt) {
  std::vector<TailEntry> table;
  std::vector<Complex> outer_sequence;
  for (int n : outer.indices()) {
    const InnerTail tail = inner_tail(f, inner, outer, n, opt.inner_index_offset);
    TailEntry entry;
    entry.outer_index = n;
    entry.inner_count = tail.count();
    const auto lim = tail_limit(tail.terms, opt.tol, opt.tail_window);
    entry.inner_cauchy = lim.has_value();
    if (lim) {
      entry.inner_limit = *lim;
      outer_sequence.push_back(*lim);
    }
    table.push_back(entry);
    if (!lim && tail.count() >= 2) {
      // a non-Cauchy inner tail poisons the whole order
      return {std::nullopt, table};
    }
  }
  if (outer_sequence.size() < 3) return {std::nullopt, table};
  return {tail_limit(outer_sequence, opt.tol, opt.tail_window), table};
}

}  // namespace

DoubleLimitReport double_limit_probe(const Signal& signal, const SequenceFamily& fam_a,
                                     const SequenceFamily& fam_b, const ProbeOptions& opt) {
  DoubleLimitReport rep;
  rep.tol = opt.tol;
  rep.separation = opt.separation;

  auto [nu, nu_table] = iterated_limit(signal, fam_a, fam_b, opt);
  auto [mu, mu_table] = iterated_limit(signal, fam_b, fam_a, opt);
  rep.nu = nu;
  rep.mu = mu;
  rep.nu_table = std::move(nu_table);
  rep.mu_table = std::move(mu_table);

  if (nu && mu) {
    rep.discrepancy = std::abs(*nu - *mu);
    rep.verdict = rep.discrepancy > opt.separation ? DoubleLimitVerdict::Violation
                                                   : DoubleLimitVerdict::Consistent;
    rep.detail = "both iterated limits Cauchy";
  } else {
    rep.verdict = DoubleLimitVerdict::Inconclusive;
    rep.detail = std::string("tail not Cauchy within the index budget: ") +
                 (nu ? "" : "nu ") + (mu ? "" : "mu");
  }
  return rep;
}

FamilyBank default_family_bank() {
  FamilyBank bank;
  const double taus[] = {0.0, std::numbers::pi / 2, std::numbers::pi, 3 * std::numbers::pi / 2};
  for (double ta : taus)
    for (double tb : taus)
      bank.emplace_back(SequenceFamily::exponential(ta, 0, 40), SequenceFamily::exponential(tb, 0, 40));
  bank.emplace_back(SequenceFamily::power16(0, 12), SequenceFamily::power16_shift(0, 12));
  bank.emplace_back(SequenceFamily::power16(0, 28, 4), SequenceFamily::power16_shift(0, 28, 4));
  bank.emplace_back(SequenceFamily::arithmetic(0.0, 1.0, 0, 400),
                    SequenceFamily::arithmetic(0.0, std::numbers::sqrt2, 0, 400));
  return bank;
}

WapSearchResult wap_verdict(const Signal& signal, const FamilyBank& bank, int budget,
                            const ProbeOptions& opt) {
  if (bank.empty()) throw std::invalid_argument("wap_verdict: empty family bank");
  WapSearchResult res;
  for (std::size_t i = 0; i < bank.size() && res.pairs_probed < budget; ++i) {
    ++res.pairs_probed;
    DoubleLimitReport rep = double_limit_probe(signal, bank[i].first, bank[i].second, opt);
    if (rep.verdict == DoubleLimitVerdict::Violation) {
      res.verdict = WapVerdict::ViolationFound;
      res.pair_index = i;
      res.counterexample = std::move(rep);
      return res;
    }
  }
  res.verdict = WapVerdict::NoViolationFound;
  return res;
}

LimitEstimate bohr_coefficient(const Signal& signal, double omega, const Schedule& schedule,
                               double tol, const QuadOptions& quad) {
  if (!std::isfinite(omega)) throw std::domain_error("bohr_coefficient: omega must be finite");
  if (!(schedule.r0 > 0)) throw std::domain_error("bohr_coefficient: r0 must be positive");

  const auto integrand = [&](double t) {
    return std::polar(1.0, -omega * t) * signal(t);
  };

  // calibrate the step on the first stretch per the halving rule
  double h = quad.h;
  {
    Complex coarse = simpson_rule(integrand, 0.0, schedule.r0, h);
    for (int refine = 0; refine < quad.max_refine; ++refine) {
      const Complex fine = simpson_rule(integrand, 0.0, schedule.r0, h / 2);
      const double diff = std::abs(fine - coarse);
      if (diff <= (tol / 10.0) * std::max(1.0, std::abs(fine))) break;
      h /= 2;
      coarse = fine;
    }
  }

  LimitEstimate est;
  est.tol = tol;
  Complex integral(0, 0);
  double lo = 0.0, horizon = schedule.r0;
  std::vector<Complex> means;
  for (int k = 0; k <= schedule.k_max; ++k) {
    integral += simpson_rule(integrand, lo, horizon, h);
    means.push_back(integral / horizon);
    est.r_history.push_back(horizon);
    if (k > 0) est.residuals.push_back(std::abs(means[k] - means[k - 1]));
    const std::size_t nr = est.residuals.size();
    if (nr >= 2 && est.residuals[nr - 1] <= tol && est.residuals[nr - 2] <= tol) {
      est.converged = true;
      break;
    }
    lo = horizon;
    horizon *= 2.0;
  }
  est.value = Vector::Constant(1, means.back());
  return est;
}

ApProbeReport ap_probe(const Signal& signal, double eps, double horizon, double gap_bound,
                       const ApProbeOptions& opt) {
  if (!(eps > 0)) throw std::domain_error("ap_probe: eps must be positive");
  if (!std::isfinite(horizon) || !(horizon > 0))
    throw std::domain_error("ap_probe: horizon must be positive and finite");

  const double tau_step = opt.tau_step > 0 ? opt.tau_step : eps / 8.0;
  const int screen_samples = 16;
  const int full_samples = static_cast<int>(opt.window / opt.sample_step) + 1;

  std::vector<Complex> base(full_samples);
  for (int j = 0; j < full_samples; ++j) base[j] = signal(opt.sample_step * j);

  ApProbeReport rep;
  rep.epsilon = eps;
  rep.horizon = horizon;
  rep.gap_bound = gap_bound;

  // coarse pre-screen on a sparse exact sample before the full window sup
  const double screen_stride = opt.window / (screen_samples - 1);
  std::vector<std::pair<double, Complex>> screen(screen_samples);
  for (int j = 0; j < screen_samples; ++j) {
    const double t = screen_stride * j;
    screen[j] = {t, signal(t)};
  }
  for (double tau = tau_step; tau <= horizon; tau += tau_step) {
    bool ok = true;
    for (int j = 0; j < screen_samples && ok; ++j)
      if (std::abs(signal(screen[j].first + tau) - screen[j].second) > eps) ok = false;
    if (!ok) continue;
    double sup = 0.0;
    for (int j = 0; j < full_samples && sup <= eps; ++j)
      sup = std::max(sup, std::abs(signal(opt.sample_step * j + tau) - base[j]));
    if (sup <= eps) rep.epsilon_periods.push_back(tau);
  }

  double prev = 0.0;
  for (double tau : rep.epsilon_periods) {
    rep.max_gap = std::max(rep.max_gap, tau - prev);
    prev = tau;
  }
  rep.max_gap = std::max(rep.max_gap, horizon - prev);
  rep.relatively_dense_evidence = !rep.epsilon_periods.empty() && rep.max_gap <= gap_bound;
  return rep;
}

}  // namespace ergosplit
