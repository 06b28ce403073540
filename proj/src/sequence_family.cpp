// Copyright (c) 2026 the ergosplit developers
// SPDX-License-Identifier: Apache-2.0

#include "ergosplit/sequence_family.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace ergosplit {

namespace {
// exp argument cap keeping t_m + s_n inside the representable range
constexpr double kExpArgCap = 700.0;
constexpr int kPow16Cap = 63;  // 16^63 = 2^252
}  // namespace

SequenceFamily SequenceFamily::exponential(double tau, int m_min, int m_max, int stride) {
  SequenceFamily f;
  f.kind_ = Kind::Exponential;
  f.tau_ = tau;
  f.m_min_ = m_min;
  f.m_max_ = m_max;
  f.stride_ = stride;
  if (2.0 * m_max * std::numbers::pi + tau > kExpArgCap)
    throw FamilyRangeError("exponential family: index bound " + std::to_string(m_max) +
                           " overflows (2 m pi + tau must stay below 700)");
  std::ostringstream d;
  d << "exponential(tau=" << tau << ")[" << m_min << ":" << m_max << ":" << stride << "]";
  f.descriptor_ = d.str();
  f.validate();
  return f;
}

SequenceFamily SequenceFamily::power16(int m_min, int m_max, int stride) {
  SequenceFamily f;
  f.kind_ = Kind::Power16;
  f.m_min_ = m_min;
  f.m_max_ = m_max;
  f.stride_ = stride;
  if (m_max > kPow16Cap)
    throw FamilyRangeError("power16 family: index bound " + std::to_string(m_max) +
                           " overflows (max exponent 63)");
  std::ostringstream d;
  d << "power16[" << m_min << ":" << m_max << ":" << stride << "]";
  f.descriptor_ = d.str();
  f.validate();
  return f;
}

SequenceFamily SequenceFamily::power16_shift(int m_min, int m_max, int stride) {
  SequenceFamily f;
  f.kind_ = Kind::Power16Shift;
  f.m_min_ = m_min;
  f.m_max_ = m_max;
  f.stride_ = stride;
  if (m_max + 1 > kPow16Cap)
    throw FamilyRangeError("power16_shift family: index bound " + std::to_string(m_max) +
                           " overflows (max exponent 63)");
  std::ostringstream d;
  d << "power16_shift[" << m_min << ":" << m_max << ":" << stride << "]";
  f.descriptor_ = d.str();
  f.validate();
  return f;
}

SequenceFamily SequenceFamily::arithmetic(double a, double d, int m_min, int m_max, int stride) {
  SequenceFamily f;
  f.kind_ = Kind::Arithmetic;
  f.a_ = a;
  f.d_ = d;
  f.m_min_ = m_min;
  f.m_max_ = m_max;
  f.stride_ = stride;
  if (!(d > 0)) throw FamilyRangeError("arithmetic family: step must be positive");
  std::ostringstream ds;
  ds << "arithmetic(a=" << a << ",d=" << d << ")[" << m_min << ":" << m_max << ":" << stride
     << "]";
  f.descriptor_ = ds.str();
  f.validate();
  return f;
}

SequenceFamily SequenceFamily::explicit_list(std::vector<double> values, int stride) {
  SequenceFamily f;
  f.kind_ = Kind::Explicit;
  f.values_ = std::move(values);
  f.m_min_ = 0;
  f.m_max_ = static_cast<int>(f.values_.size()) - 1;
  f.stride_ = stride;
  f.descriptor_ = "explicit[" + std::to_string(f.values_.size()) + "]";
  f.validate();
  return f;
}

void SequenceFamily::validate() const {
  if (m_min_ > m_max_) throw FamilyRangeError("sequence family: empty index range");
  if (stride_ < 1) throw FamilyRangeError("sequence family: stride must be >= 1");
  double prev = -std::numeric_limits<double>::infinity();
  for (int m : indices()) {
    const double v = value(m);
    if (!std::isfinite(v)) throw FamilyRangeError("sequence family: non-finite value at index " +
                                                  std::to_string(m));
    if (v <= prev)
      throw FamilyRangeError("sequence family: values must be strictly increasing");
    prev = v;
  }
}

double SequenceFamily::value(int m) const {
  switch (kind_) {
    case Kind::Exponential:
      return std::exp(2.0 * m * std::numbers::pi + tau_);
    case Kind::Power16:
      return std::exp2(4.0 * m);
    case Kind::Power16Shift:
      return std::exp2(4.0 * (m + 1));
    case Kind::Arithmetic:
      return a_ + static_cast<double>(m) * d_;
    case Kind::Explicit:
      return values_.at(static_cast<std::size_t>(m));
  }
  throw std::logic_error("unreachable");
}

std::vector<int> SequenceFamily::indices() const {
  std::vector<int> out;
  for (int m = m_min_; m <= m_max_; m += stride_) out.push_back(m);
  return out;
}

std::optional<int> SequenceFamily::power16_exponent(int m) const {
  if (kind_ == Kind::Power16) return m;
  if (kind_ == Kind::Power16Shift) return m + 1;
  return std::nullopt;
}

}  // namespace ergosplit
