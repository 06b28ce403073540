// Copyright (c) 2026 the ergosplit developers
// SPDX-License-Identifier: Apache-2.0

#include "ergosplit/signal.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ergosplit {

Complex Signal::operator()(double t) const {
  if (!eval_) throw std::logic_error("Signal: evaluating a default-constructed signal");
  const Complex v = eval_(t);
  if (std::abs(v) > bound_ * (1.0 + 1e-9) + 1e-12)
    throw std::runtime_error("Signal '" + descriptor_ + "': declared bound " +
                             std::to_string(bound_) + " violated at t=" + std::to_string(t));
  return v;
}

Signal Signal::constant(Complex c) {
  Signal s;
  s.eval_ = [c](double) { return c; };
  s.bound_ = std::abs(c);
  s.descriptor_ = "constant";
  return s;
}

Signal Signal::trig_polynomial(std::vector<std::pair<Complex, double>> terms) {
  double bound = 0.0;
  for (const auto& [c, w] : terms) bound += std::abs(c);
  Signal s;
  s.eval_ = [terms = std::move(terms)](double t) {
    Complex acc(0, 0);
    for (const auto& [c, w] : terms) acc += c * std::polar(1.0, w * t);
    return acc;
  };
  s.bound_ = bound;
  s.descriptor_ = "trig_polynomial";
  return s;
}

Signal Signal::sine_sum(std::vector<double> freqs) {
  std::vector<std::pair<Complex, double>> terms;
  const Complex half_over_i(0.0, -0.5);  // 1/(2i)
  for (double w : freqs) {
    terms.emplace_back(half_over_i, w);
    terms.emplace_back(-half_over_i, -w);
  }
  Signal s = trig_polynomial(std::move(terms));
  std::ostringstream d;
  d << "sine_sum(";
  for (std::size_t i = 0; i < freqs.size(); ++i) d << (i ? "," : "") << freqs[i];
  d << ")";
  s.descriptor_ = d.str();
  return s;
}

Signal Signal::from_function(std::function<Complex(double)> f, double bound,
                             std::string descriptor) {
  Signal s;
  s.eval_ = std::move(f);
  s.bound_ = bound;
  s.descriptor_ = std::move(descriptor);
  return s;
}

Signal Signal::from_function(std::function<Complex(double)> f, double bound,
                             std::string descriptor, double support_lo, double support_hi) {
  Signal s = from_function(std::move(f), bound, std::move(descriptor));
  s.support_ = {support_lo, support_hi};
  return s;
}

Signal Signal::tabulated(std::vector<double> times, std::vector<Complex> values, double bound) {
  if (times.size() != values.size() || times.size() < 2)
    throw std::invalid_argument("Signal::tabulated: need >= 2 samples with matching sizes");
  for (std::size_t i = 1; i < times.size(); ++i)
    if (!(times[i] > times[i - 1]))
      throw std::invalid_argument("Signal::tabulated: times must be strictly increasing");

  Signal s;
  const double lo = times.front(), hi = times.back();
  s.eval_ = [times = std::move(times), values = std::move(values)](double t) -> Complex {
    if (t <= times.front()) return t == times.front() ? values.front() : Complex(0, 0);
    if (t >= times.back()) return t == times.back() ? values.back() : Complex(0, 0);
    const auto it = std::upper_bound(times.begin(), times.end(), t);
    const std::size_t j = static_cast<std::size_t>(it - times.begin());
    const double w = (t - times[j - 1]) / (times[j] - times[j - 1]);
    return values[j - 1] * (1.0 - w) + values[j] * w;
  };
  s.bound_ = bound;
  s.descriptor_ = "tabulated";
  s.support_ = {lo, hi};
  return s;
}

Signal Signal::combination(std::vector<std::pair<Complex, Signal>> terms) {
  double bound = 0.0;
  for (const auto& [c, f] : terms) bound += std::abs(c) * f.bound();
  Signal s;
  s.eval_ = [terms](double t) {
    Complex acc(0, 0);
    for (const auto& [c, f] : terms) acc += c * f(t);
    return acc;
  };
  s.bound_ = bound;
  s.descriptor_ = "combination";
  return s;
}

}  // namespace ergosplit
