// Copyright (c) 2026 the ergosplit developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ergosplit/types.hpp"

namespace ergosplit {

struct EigConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Point spectrum with spectral projectors. Eigenvalues are clustered: one
// entry per distinct eigenvalue with its algebraic multiplicity. Projectors
// are computed for semisimple eigenvalues only; a defective eigenvalue is
// flagged and its projector is left empty (0x0).
struct SpectralData {
  std::vector<Complex> eigenvalues;
  std::vector<int> multiplicities;
  std::vector<Matrix> projectors;
  std::vector<bool> defect_flags;

  bool any_defective() const {
    for (bool d : defect_flags)
      if (d) return true;
    return false;
  }
};

struct BoundednessReport {
  bool bounded = false;
  double bound = 0.0;  // certified sup_{t>=0} ||e^{tA}|| when bounded
  std::string reason;
};

// Eigendecomposition with spectral projectors via the complex Schur form.
// `tol` is the imaginary-axis band half-width used downstream; eigenvalue
// clustering and rank decisions use a defect-robust threshold never below
// ~sqrt(machine eps) times the matrix scale.
SpectralData eig(const Matrix& a, double tol = kDefaultAxisTol);

// A matrix semigroup {e^{tA}} is bounded iff every eigenvalue satisfies
// Re lambda <= tol and every eigenvalue in the band |Re lambda| <= tol is
// semisimple. The certified bound sums axis projector norms and a
// Schur-triangular envelope for the stable part.
BoundednessReport certify_bounded(const Matrix& a, double tol = kDefaultAxisTol);
BoundednessReport certify_bounded(const Matrix& a, const SpectralData& sd, double tol);

}  // namespace ergosplit
