// Copyright (c) 2026 the ergosplit developers
// SPDX-License-Identifier: Apache-2.0
//
// Shared test-only helpers: random bounded models with a held-back
// construction oracle, and independent reference computations.

#pragma once

#include <random>
#include <vector>

#include "ergosplit/types.hpp"

namespace ergosplit::testing {

// Truncated power series sum_{k<=terms} (tA)^k / k!; the independent oracle
// for the matrix exponential on small norms.
inline Matrix expm_series(const Matrix& a, double t, int terms = 25) {
  const Eigen::Index n = a.rows();
  Matrix acc = Matrix::Identity(n, n);
  Matrix pow = Matrix::Identity(n, n);
  for (int k = 1; k <= terms; ++k) {
    pow = (pow * (t * a) / static_cast<double>(k)).eval();
    acc += pow;
  }
  return acc;
}

inline Matrix random_matrix(std::mt19937_64& rng, int n, double scale) {
  std::normal_distribution<double> gauss;
  Matrix a(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) a(r, c) = Complex(gauss(rng), gauss(rng));
  const double nrm = a.norm();
  return nrm > 0 ? Matrix(a * (scale / nrm)) : a;
}

// A diagonalizable bounded generator built as V D V^{-1} together with its
// construction data, so tests own an exact spectral-projector oracle that
// never touches the eig() implementation.
struct BoundedModelOracle {
  Matrix a;
  Matrix v, v_inv;
  std::vector<Complex> eigenvalues;  // per coordinate
  std::vector<double> axis_freqs;    // sorted distinct imaginary parts of axis spectrum

  Matrix projector_for(Complex lambda, double tol = 1e-9) const {
    const Eigen::Index n = a.rows();
    Matrix sel = Matrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      if (std::abs(eigenvalues[static_cast<std::size_t>(i)] - lambda) < tol) sel(i, i) = 1.0;
    return v * sel * v_inv;
  }

  Matrix axis_projector(double omega) const { return projector_for(Complex(0.0, omega), 1e-7); }

  Matrix expm_exact(double t) const {
    const Eigen::Index n = a.rows();
    Matrix d = Matrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      d(i, i) = std::exp(eigenvalues[static_cast<std::size_t>(i)] * t);
    return v * d * v_inv;
  }
};

// n_axis purely imaginary eigenvalues with pairwise gaps >= gap, the rest
// strictly stable; similarity transform with a condition cap.
inline BoundedModelOracle random_bounded_model(std::mt19937_64& rng, int n, int n_axis,
                                               double gap = 0.5) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  BoundedModelOracle m;

  std::vector<double> freqs;
  double w = -2.0 + unif(rng);
  for (int i = 0; i < n_axis; ++i) {
    freqs.push_back(w);
    w += gap + unif(rng);
  }

  for (int i = 0; i < n; ++i) {
    if (i < n_axis)
      m.eigenvalues.push_back(Complex(0.0, freqs[static_cast<std::size_t>(i)]));
    else
      m.eigenvalues.push_back(Complex(-0.5 - 1.5 * unif(rng), -2.0 + 4.0 * unif(rng)));
  }

  for (;;) {
    std::normal_distribution<double> gauss;
    Matrix v(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) v(r, c) = Complex(gauss(rng), gauss(rng));
    const Eigen::JacobiSVD<Matrix> svd(v);
    const double cond =
        svd.singularValues()(0) / svd.singularValues()(svd.singularValues().size() - 1);
    if (cond > 50.0) continue;
    m.v = v;
    m.v_inv = v.inverse();
    break;
  }

  Matrix d = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) d(i, i) = m.eigenvalues[static_cast<std::size_t>(i)];
  m.a = m.v * d * m.v_inv;

  m.axis_freqs.assign(freqs.begin(), freqs.end());
  return m;
}

inline Vector random_vector(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> gauss;
  Vector x(n);
  for (int i = 0; i < n; ++i) x(i) = Complex(gauss(rng), gauss(rng));
  return x;
}

}  // namespace ergosplit::testing
