// Copyright (c) 2026 the ergosplit developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ergosplit {

struct FamilyRangeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Generator of index -> time sequences {t_m}: the concrete stand-ins for the
// index nets of the double-limit criterion. Values must be strictly
// increasing and finite over the declared index range; the constructors
// enforce kind-specific overflow caps.
class SequenceFamily {
 public:
  enum class Kind { Exponential, Power16, Power16Shift, Arithmetic, Explicit };

  // t_m = exp(2 m pi + tau)
  static SequenceFamily exponential(double tau, int m_min, int m_max, int stride = 1);
  // t_m = 16^m
  static SequenceFamily power16(int m_min, int m_max, int stride = 1);
  // t_m = 16^{m+1}
  static SequenceFamily power16_shift(int m_min, int m_max, int stride = 1);
  // t_m = a + m d, d > 0
  static SequenceFamily arithmetic(double a, double d, int m_min, int m_max, int stride = 1);
  static SequenceFamily explicit_list(std::vector<double> values, int stride = 1);

  Kind kind() const { return kind_; }
  int m_min() const { return m_min_; }
  int m_max() const { return m_max_; }
  int stride() const { return stride_; }
  const std::string& descriptor() const { return descriptor_; }

  double value(int m) const;
  std::vector<int> indices() const;  // m_min, m_min+stride, ..., <= m_max

  // base-16 exponent of the exact integer value, for the 16-power kinds
  std::optional<int> power16_exponent(int m) const;

 private:
  SequenceFamily() = default;
  void validate() const;

  Kind kind_ = Kind::Explicit;
  double tau_ = 0.0, a_ = 0.0, d_ = 0.0;
  std::vector<double> values_;
  int m_min_ = 0, m_max_ = 0, stride_ = 1;
  std::string descriptor_;
};

}  // namespace ergosplit
