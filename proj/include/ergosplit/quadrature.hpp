// Copyright (c) 2026 the ergosplit developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <utility>

namespace ergosplit {

// Composite Simpson rule over [a, b] with step <= h (even panel count).
// Works for any value type supporting scalar multiplication and addition.
template <typename F>
auto simpson_rule(F&& f, double a, double b, double h) -> decltype(f(a)) {
  long n = std::lround(std::ceil((b - a) / h));
  if (n < 2) n = 2;
  if (n % 2) ++n;
  const double step = (b - a) / static_cast<double>(n);
  auto acc = f(a) + f(b);
  for (long k = 1; k < n; ++k)
    acc = acc + f(a + step * static_cast<double>(k)) * ((k % 2) ? 4.0 : 2.0);
  return acc * (step / 3.0);
}

}  // namespace ergosplit
