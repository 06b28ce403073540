// Copyright (c) 2026 the ergosplit developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace ergosplit {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// An element of the dual space. In finite dimension the sun dual is the full
// dual and carries the same coordinates; the tag lives in the API.
using DualVector = Eigen::VectorXcd;

inline constexpr int kMaxDim = 64;
inline constexpr double kDefaultAxisTol = 1e-9;

// Duality pairing <u, v> = sum_i u_i conj(v_i); linear in u, conjugate-linear
// in v. With the dual semigroup generated by the conjugate transpose A^H this
// convention makes <T(t)x, v> = <x, T_dual(t)v> hold to machine precision.
inline Complex pairing(const Vector& u, const Vector& v) { return v.dot(u); }

// Validates the shape and content contract for a semigroup generator.
inline void validate_generator(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("generator must be square");
  if (a.rows() < 1 || a.rows() > kMaxDim)
    throw std::invalid_argument("generator dimension must be in [1, " + std::to_string(kMaxDim) + "]");
  if (!a.allFinite()) throw std::invalid_argument("generator has non-finite entries");
}

}  // namespace ergosplit
