// Copyright (c) 2026 the ergosplit developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ergosplit/types.hpp"

namespace ergosplit {

// A bounded evaluable function t -> complex value. Carries a declared bound
// that is checked on every evaluation, an optional support window (used by
// integrable probes in translation pairings), and a descriptor naming the
// construction. Signals built from exact integer data may expose an integer
// evaluation path so probes can bypass double rounding at huge arguments.
class Signal {
 public:
  using UInt128 = unsigned __int128;

  Signal() = default;

  Complex operator()(double t) const;

  Signal& with_integer_eval(std::function<Complex(UInt128)> f) {
    integer_eval_ = std::move(f);
    return *this;
  }
  bool has_integer_eval() const { return static_cast<bool>(integer_eval_); }
  Complex eval_integer(UInt128 k) const { return integer_eval_(k); }

  double bound() const { return bound_; }
  const std::string& descriptor() const { return descriptor_; }
  bool has_support() const { return support_.has_value(); }
  std::pair<double, double> support() const { return *support_; }

  static Signal constant(Complex c);
  // sum of c_k e^{i w_k t}
  static Signal trig_polynomial(std::vector<std::pair<Complex, double>> terms);
  // sum of sin(w_k t) for real frequencies
  static Signal sine_sum(std::vector<double> freqs);
  static Signal from_function(std::function<Complex(double)> f, double bound,
                              std::string descriptor);
  static Signal from_function(std::function<Complex(double)> f, double bound,
                              std::string descriptor, double support_lo, double support_hi);
  // piecewise-linear interpolation of samples at strictly increasing times;
  // zero outside the sampled window, support = sampled window
  static Signal tabulated(std::vector<double> times, std::vector<Complex> values, double bound);
  static Signal combination(std::vector<std::pair<Complex, Signal>> terms);

 private:
  std::function<Complex(double)> eval_;
  std::function<Complex(UInt128)> integer_eval_;
  double bound_ = 0.0;
  std::string descriptor_;
  std::optional<std::pair<double, double>> support_;
};

}  // namespace ergosplit
