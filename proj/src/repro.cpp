// Copyright (c) 2026 the ergosplit developers
// SPDX-License-Identifier: Apache-2.0

#include "ergosplit/repro.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ergosplit/quadrature.hpp"
#include "ergosplit/signal.hpp"

namespace ergosplit {

namespace {

using u128 = unsigned __int128;

constexpr int kMaxExp16 = 30;  // 16^30 = 2^120 fits u128 sums comfortably

u128 pow16(int e) { return u128(1) << (4 * e); }

// is v a power of 16 with exponent <= max_exp? (exponent returned when so)
bool is_pow16(u128 v, int max_exp, int* exp_out = nullptr) {
  for (int e = 0; e <= max_exp; ++e) {
    if (pow16(e) == v) {
      if (exp_out) *exp_out = e;
      return true;
    }
    if (pow16(e) > v) return false;
  }
  return false;
}

}  // namespace

double log_sine(double t) { return std::sin(std::log(std::abs(t) + 1.0)); }

double tent_bump(double s) {
  if (s < 0) throw std::domain_error("tent_bump: argument must be nonnegative");
  return s <= 0.25 ? 4.0 * (0.25 - s) : 0.0;
}

double binary_log_sine(double t) {
  return std::sin(std::numbers::pi / 8.0 * std::log2(std::abs(t) + 1.0));
}

bool power16_combination(u128 k) {
  for (int a = 0; a <= kMaxExp16; ++a) {
    const u128 p = pow16(a);
    if (p >= k) {
      if (is_pow16(p - k, a)) return true;  // k = 16^a - 16^b, b <= a
    } else {
      if (is_pow16(k - p, a)) return true;  // k = 16^a + 16^b, b <= a
    }
  }
  return false;
}

double power16_window_sum(double t) {
  const double nearest = std::round(t);
  if (nearest < 0) return 0.0;
  const double dist = std::abs(t - nearest);
  if (dist > 0.25) return 0.0;
  // the membership scan is exact up to exponent kMaxExp16; beyond that no
  // claim is decidable and the window sum reports empty
  if (nearest >= 2.0 * std::exp2(4.0 * kMaxExp16)) return 0.0;
  const u128 k = static_cast<u128>(nearest);
  return power16_combination(k) ? tent_bump(dist) : 0.0;
}

double windowed_binary_log_sine(double t) {
  const double g = power16_window_sum(t);
  return g == 0.0 ? 0.0 : g * binary_log_sine(t);
}

double log2_two_power_sum(int p, int q) {
  if (q > p) std::swap(p, q);
  return 4.0 * p + std::log2(1.0 + std::exp2(4.0 * (q - p)) + std::exp2(-4.0 * p));
}

Signal make_log_sine_signal() {
  return Signal::from_function([](double t) { return Complex(log_sine(t), 0.0); }, 1.0,
                               "log_sine");
}

Signal make_binary_log_sine_signal() {
  return Signal::from_function([](double t) { return Complex(binary_log_sine(t), 0.0); }, 1.0,
                               "binary_log_sine");
}

Signal make_windowed_binary_log_sine_signal() {
  Signal s = Signal::from_function(
      [](double t) { return Complex(windowed_binary_log_sine(t), 0.0); }, 1.0,
      "windowed_binary_log_sine");
  s.with_integer_eval([](Signal::UInt128 k) -> Complex {
    if (k == 0) return Complex(0.0, 0.0);  // h(0) = sin(0)
    if (!power16_combination(k)) return Complex(0.0, 0.0);
    // integer member: the tent weight is exactly 1 and only log2(k + 1) is
    // needed; split off the leading power to keep the log exact at any size
    int lead = 0;
    while ((k >> (4 * (lead + 1))) != 0) ++lead;
    const double rest = static_cast<double>(k - (Signal::UInt128(1) << (4 * lead)));
    const double l2 = 4.0 * lead + std::log2(1.0 + (rest + 1.0) * std::exp2(-4.0 * lead));
    return Complex(std::sin(std::numbers::pi / 8.0 * l2), 0.0);
  });
  return s;
}

Eigen::VectorXd bump_coordinates(double t, int dim) {
  if (dim < 2) throw std::invalid_argument("bump_coordinates: dimension must be >= 2");
  Eigen::VectorXd v = Eigen::VectorXd::Zero(dim);
  if (!(t > 0) || !std::isfinite(t)) return v;
  for (int n = 2; n <= dim; ++n) {
    const double lo = std::exp2(2 * n + 1);
    const double hi = std::exp2(2 * (n + 1));
    if (t < lo || t > hi) continue;
    double val = 1.0;
    if (t < lo + 1.0)
      val = t - lo;  // rising unit ramp
    else if (t > hi - 1.0)
      val = hi - t;  // falling unit ramp
    v(n - 1) = val;
    break;  // supports are pairwise disjoint
  }
  return v;
}

ReproResult repro_11_2(int m_min, int m_max, double tol) {
  if (m_min > m_max) throw std::invalid_argument("repro_11_2: empty index range");
  if (m_max > 100) throw std::invalid_argument("repro_11_2: index range exceeds overflow cap 100");

  ReproResult res;
  res.claim_id = "11.2";
  res.tolerance = tol;
  const double shifts[] = {0.0, 1.0, 50.0, 100.0};
  for (double s : shifts) {
    double worst = 1.0;
    for (int m = m_min; m <= m_max; ++m) {
      const double tm = std::exp(2.0 * m * std::numbers::pi + std::numbers::pi / 2.0);
      worst = std::min(worst, log_sine(s + tm));
    }
    ReproEntry e;
    e.label = "min over m of f(s + t_m), s = " + std::to_string(static_cast<int>(s));
    e.computed = worst;
    e.target = 1.0;
    e.deviation = std::abs(1.0 - worst);
    res.values.push_back(e);
    res.max_deviation = std::max(res.max_deviation, e.deviation);
  }
  res.pass = res.max_deviation <= tol;
  return res;
}

namespace {

// h at the exact integer 16^p + 16^q: the point is in the membership set by
// construction, so h reduces to the binary-log sine at that argument
double h_at_two_power_sum(int p, int q) {
  return std::sin(std::numbers::pi / 8.0 * log2_two_power_sum(p, q));
}

}  // namespace

ReproResult repro_11_10(int budget, double tol) {
  if (budget < 6 || budget > kMaxExp16 - 1)
    throw std::invalid_argument("repro_11_10: budget must be in [6, " +
                                std::to_string(kMaxExp16 - 1) + "]");

  ReproResult res;
  res.claim_id = "11.10";
  res.tolerance = tol;

  // tail toward 1: fixed m, n through the stride-4 subsequence (s_n dominates)
  for (int m_fixed : {2, 3}) {
    double last = 0.0;
    int last_n = -1;
    for (int n = 4; n <= budget - 1; n += 4) {
      if (n < m_fixed + 1) continue;
      last = h_at_two_power_sum(n + 1, m_fixed);  // s_n + t_m = 16^{n+1} + 16^m
      last_n = n;
    }
    ReproEntry e;
    e.label = "h(s_n + t_" + std::to_string(m_fixed) + "), n = " + std::to_string(last_n);
    e.computed = last;
    e.target = 1.0;
    e.deviation = std::abs(1.0 - last);
    res.values.push_back(e);
    res.max_deviation = std::max(res.max_deviation, e.deviation);
  }

  // tail toward 0: fixed n, m through the stride-4 subsequence (t_m dominates)
  for (int n_fixed : {2, 3}) {
    double last = 1.0;
    int last_m = -1;
    for (int m = 4; m <= budget; m += 4) {
      if (m < n_fixed + 2) continue;
      last = h_at_two_power_sum(m, n_fixed + 1);
      last_m = m;
    }
    ReproEntry e;
    e.label = "h(s_" + std::to_string(n_fixed) + " + t_m), m = " + std::to_string(last_m);
    e.computed = last;
    e.target = 0.0;
    e.deviation = std::abs(last);
    res.values.push_back(e);
    res.max_deviation = std::max(res.max_deviation, e.deviation);
  }

  // membership: s_n + t_m lies in the set for every m <= n, so h = f there
  int checked = 0, members = 0;
  for (int n = 0; n <= budget - 1; ++n) {
    for (int m = 0; m <= n; ++m) {
      ++checked;
      if (power16_combination(pow16(n + 1) + pow16(m))) ++members;
    }
  }
  ReproEntry e;
  e.label = "members among s_n + t_m, m <= n <= " + std::to_string(budget - 1);
  e.computed = members;
  e.target = checked;
  e.deviation = static_cast<double>(checked - members);
  res.values.push_back(e);

  res.pass = res.max_deviation <= tol && members == checked;
  return res;
}

ReproResult repro_11_11(int truncation, double tol) {
  if (truncation < 4) throw std::invalid_argument("repro_11_11: truncation must be >= 4");
  if (truncation > 24) throw std::invalid_argument("repro_11_11: truncation exceeds exact range 24");

  ReproResult res;
  res.claim_id = "11.11";
  res.tolerance = tol;

  const auto array_value = [truncation](int n, int m) {
    const double arg = std::exp2(2 * n) + std::exp2(2 * m + 1) + 1.0;  // omega_n + t_m
    return bump_coordinates(arg, truncation)(m - 1);
  };

  // fixed n, m -> infinity: the shifted point lands on the m-th plateau
  double tail_one = 0.0;
  for (int n_fixed : {2, 3}) {
    const double v = array_value(n_fixed, truncation);
    ReproEntry e;
    e.label = "<g(w_" + std::to_string(n_fixed) + " + t_m), e_m>, m = " + std::to_string(truncation);
    e.computed = v;
    e.target = 1.0;
    e.deviation = std::abs(1.0 - v);
    res.values.push_back(e);
    res.max_deviation = std::max(res.max_deviation, e.deviation);
    tail_one = v;
  }

  // fixed m, n -> infinity: the shift overshoots the m-th support
  double tail_zero = 0.0;
  for (int m_fixed : {2, 3}) {
    const double v = array_value(truncation, m_fixed);
    ReproEntry e;
    e.label = "<g(w_n + t_" + std::to_string(m_fixed) + "), e_m>, n = " + std::to_string(truncation);
    e.computed = v;
    e.target = 0.0;
    e.deviation = std::abs(v);
    res.values.push_back(e);
    res.max_deviation = std::max(res.max_deviation, e.deviation);
    tail_zero = v;
  }

  const double separation = std::abs(tail_one - tail_zero);
  {
    ReproEntry e;
    e.label = "iterated limit separation";
    e.computed = separation;
    e.target = 1.0;
    e.deviation = std::abs(1.0 - separation);
    res.values.push_back(e);
  }

  // weak-null evidence: pairing of translates against a fixed window probe
  // dies once the coordinate's support is left behind
  const Signal probe = Signal::from_function(
      [](double s) { return Complex(s >= 0 && s <= 1 ? 1.0 - std::abs(2.0 * s - 1.0) : 0.0, 0.0); },
      1.0, "unit_window_hat", 0.0, 1.0);
  const int k = 2;
  const auto pairing_at = [&](double shift) {
    return simpson_rule(
               [&](double s) {
                 const double g = bump_coordinates(s + shift, truncation)(k - 1);
                 return Complex(probe(s).real() * g, 0.0);
               },
               0.0, 1.0, 1.0 / 64)
        .real();
  };
  const double inside = pairing_at(40.0);                     // plateau of coordinate 2
  const double beyond1 = std::abs(pairing_at(70.0));          // just past the support
  const double beyond2 = std::abs(pairing_at(1.0e4));         // far past every small support
  {
    ReproEntry e{"translate pairing on the plateau", inside, 0.5, std::abs(inside - 0.5)};
    res.values.push_back(e);
    ReproEntry e1{"translate pairing past the support", beyond1, 0.0, beyond1};
    res.values.push_back(e1);
    ReproEntry e2{"translate pairing far field", beyond2, 0.0, beyond2};
    res.values.push_back(e2);
  }

  res.pass = res.max_deviation <= 1e-9 && separation >= 0.9 && beyond1 <= tol && beyond2 <= tol &&
             std::abs(inside - 0.5) <= 1e-6;
  return res;
}

}  // namespace ergosplit
