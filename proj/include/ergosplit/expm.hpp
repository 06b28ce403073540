// Copyright (c) 2026 the ergosplit developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>

#include "ergosplit/types.hpp"

namespace ergosplit {

struct ExpOverflowError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Dense matrix exponential e^{tA} by scaling and squaring with a (13,13)
// Pade core. Relative accuracy ~1e-13 for ||tA|| <= 50. Throws
// ExpOverflowError when the result leaves the representable range.
Matrix expm(const Matrix& a, double t);

}  // namespace ergosplit
