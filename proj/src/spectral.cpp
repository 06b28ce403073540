// Copyright (c) 2026 the ergosplit developers
// SPDX-License-Identifier: Apache-2.0

#include "ergosplit/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace ergosplit {

namespace {

// Swaps the diagonal entries at positions (p, p+1) of an upper triangular T
// by a unitary similarity, updating Q alongside. Standard complex trexc step:
// the Givens rotation whose first column is the (normalized) eigenvector
// [b, c-a] of the trailing eigenvalue of the 2x2 block [[a, b], [0, c]].
void swap_adjacent(Matrix& t, Matrix& q, Eigen::Index p) {
  const Complex a = t(p, p);
  const Complex b = t(p, p + 1);
  const Complex c = t(p + 1, p + 1);
  const double r = std::hypot(std::abs(b), std::abs(c - a));
  if (r <= 0.0) return;  // identical eigenvalues, nothing to move

  Eigen::Matrix2cd g;
  g << b / r, -std::conj(c - a) / r, (c - a) / r, std::conj(b) / r;

  t.middleCols(p, 2) = (t.middleCols(p, 2) * g).eval();
  t.middleRows(p, 2) = (g.adjoint() * t.middleRows(p, 2)).eval();
  q.middleCols(p, 2) = (q.middleCols(p, 2) * g).eval();

  t(p + 1, p) = Complex(0, 0);
  t(p, p) = c;  // eigenvalues swap exactly
  t(p + 1, p + 1) = a;
}

// Reorders the Schur pair (T, Q) so the positions in `select` (sorted) occupy
// the leading slots, preserving relative order elsewhere.
void reorder_schur(Matrix& t, Matrix& q, std::vector<Eigen::Index> select) {
  std::sort(select.begin(), select.end());
  Eigen::Index dest = 0;
  for (Eigen::Index src : select) {
    for (Eigen::Index p = src; p > dest; --p) swap_adjacent(t, q, p - 1);
    ++dest;
  }
}

// Solves T11 R - R T22 = T12 for upper triangular T11 (k x k) and T22
// (m x m) with disjoint spectra, by forward column substitution.
Matrix solve_sylvester(const Matrix& t11, const Matrix& t22, const Matrix& t12) {
  const Eigen::Index k = t11.rows();
  const Eigen::Index m = t22.rows();
  Matrix r(k, m);
  for (Eigen::Index j = 0; j < m; ++j) {
    Vector rhs = t12.col(j);
    for (Eigen::Index i = 0; i < j; ++i) rhs += r.col(i) * t22(i, j);
    Matrix shifted = t11;
    shifted.diagonal().array() -= t22(j, j);
    r.col(j) = shifted.triangularView<Eigen::Upper>().solve(rhs);
  }
  return r;
}

// Spectral projector for the eigenvalue cluster sitting at the given Schur
// positions: reorder the cluster to the top and read the projector off the
// block form Q [[I, R], [0, 0]] Q^H with R from the Sylvester equation.
Matrix cluster_projector(const Matrix& t0, const Matrix& q0,
                         const std::vector<Eigen::Index>& positions) {
  const Eigen::Index n = t0.rows();
  const Eigen::Index k = static_cast<Eigen::Index>(positions.size());
  if (k == n) return Matrix::Identity(n, n);

  Matrix t = t0, q = q0;
  reorder_schur(t, q, positions);

  const Matrix t11 = t.topLeftCorner(k, k);
  const Matrix t22 = t.bottomRightCorner(n - k, n - k);
  const Matrix t12 = t.topRightCorner(k, n - k);
  const Matrix r = solve_sylvester(t11, t22, t12);

  Matrix x = Matrix::Zero(n, n);
  x.topLeftCorner(k, k) = Matrix::Identity(k, k);
  x.topRightCorner(k, n - k) = r;
  return q * x * q.adjoint();
}

struct SchurResult {
  Matrix t, q;
};

SchurResult schur_of(const Matrix& a) {
  Eigen::ComplexSchur<Matrix> schur(a, /*computeU=*/true);
  if (schur.info() != Eigen::Success) {
    const Eigen::Index iters = schur.getMaxIterations() * a.rows();
    throw EigConvergenceError("eig: Schur iteration failed to converge within " +
                              std::to_string(iters) + " iterations");
  }
  return {schur.matrixT(), schur.matrixU()};
}

double matrix_scale(const Matrix& a) { return std::max(1.0, a.norm()); }

// Defect-robust clustering threshold. A size-2 Jordan block perturbs its
// eigenvalues by ~sqrt(eps)*scale, so the declared tol alone would split it
// into two spuriously simple eigenvalues.
double cluster_tol(const Matrix& a, double tol) {
  const double floor_tol = 32.0 * std::sqrt(std::numeric_limits<double>::epsilon());
  return std::max(tol, floor_tol) * matrix_scale(a);
}

// Groups Schur diagonal entries into clusters of mutually close eigenvalues
// (single-linkage with threshold ctol). Returns position lists per cluster,
// ordered by first occurrence.
std::vector<std::vector<Eigen::Index>> cluster_positions(const Vector& diag, double ctol) {
  const Eigen::Index n = diag.size();
  std::vector<int> owner(n, -1);
  std::vector<std::vector<Eigen::Index>> clusters;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (owner[i] >= 0) continue;
    std::vector<Eigen::Index> members{i};
    owner[i] = static_cast<int>(clusters.size());
    for (std::size_t cursor = 0; cursor < members.size(); ++cursor) {
      for (Eigen::Index j = 0; j < n; ++j) {
        if (owner[j] >= 0) continue;
        if (std::abs(diag(j) - diag(members[cursor])) <= ctol) {
          owner[j] = owner[i];
          members.push_back(j);
        }
      }
    }
    std::sort(members.begin(), members.end());
    clusters.push_back(std::move(members));
  }
  return clusters;
}

int geometric_multiplicity(const Matrix& a, Complex lambda, double sigma_tol) {
  Matrix shifted = a;
  shifted.diagonal().array() -= lambda;
  Eigen::JacobiSVD<Matrix> svd(shifted);
  int count = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) <= sigma_tol) ++count;
  return count;
}

}  // namespace

SpectralData eig(const Matrix& a, double tol) {
  validate_generator(a);
  const SchurResult schur = schur_of(a);
  const Vector diag = schur.t.diagonal();
  const double ctol = cluster_tol(a, tol);

  SpectralData sd;
  for (const auto& members : cluster_positions(diag, ctol)) {
    Complex mean(0, 0);
    for (Eigen::Index p : members) mean += diag(p);
    mean /= static_cast<double>(members.size());

    const int alg = static_cast<int>(members.size());
    const int geo = geometric_multiplicity(a, mean, 8.0 * ctol);
    const bool defective = geo < alg;

    sd.eigenvalues.push_back(mean);
    sd.multiplicities.push_back(alg);
    sd.defect_flags.push_back(defective);
    sd.projectors.push_back(defective ? Matrix() : cluster_projector(schur.t, schur.q, members));
  }
  return sd;
}

BoundednessReport certify_bounded(const Matrix& a, double tol) {
  return certify_bounded(a, eig(a, tol), tol);
}

BoundednessReport certify_bounded(const Matrix& a, const SpectralData& sd, double tol) {
  validate_generator(a);
  BoundednessReport report;

  for (std::size_t i = 0; i < sd.eigenvalues.size(); ++i) {
    const double re = sd.eigenvalues[i].real();
    if (re > tol) {
      report.reason = "eigenvalue with Re > tol: orbit grows exponentially";
      return report;
    }
    if (std::abs(re) <= tol && sd.defect_flags[i]) {
      report.reason = "defective imaginary-axis eigenvalue: orbit grows polynomially";
      return report;
    }
  }

  // Certified bound: ||e^{tA}|| <= sum_axis ||P_i|| + ||P_stable|| *
  // sup_t e^{-delta t} sum_{k<K} (t ||N||)^k / k!, with N the strict upper
  // triangle of the stable Schur block and delta its spectral margin.
  const Eigen::Index n = a.rows();
  SchurResult schur = schur_of(a);

  double axis_norms = 0.0;
  Matrix axis_sum = Matrix::Zero(n, n);
  std::vector<Eigen::Index> stable_positions;
  for (Eigen::Index p = 0; p < n; ++p)
    if (schur.t(p, p).real() < -tol) stable_positions.push_back(p);

  for (std::size_t i = 0; i < sd.eigenvalues.size(); ++i) {
    if (std::abs(sd.eigenvalues[i].real()) > tol) continue;
    axis_norms += sd.projectors[i].operatorNorm();
    axis_sum += sd.projectors[i];
  }

  double stable_part = 0.0;
  if (!stable_positions.empty()) {
    reorder_schur(schur.t, schur.q, stable_positions);
    const Eigen::Index k = static_cast<Eigen::Index>(stable_positions.size());
    const Matrix tst = schur.t.topLeftCorner(k, k);
    const double delta = -tst.diagonal().real().maxCoeff();
    if (!(delta > tol / 2)) {
      report.reason = "stable spectral margin too thin to certify a bound";
      return report;
    }
    const Matrix nil = tst.triangularView<Eigen::StrictlyUpper>();
    const double nn = nil.operatorNorm();
    double envelope = 1.0;  // k = 0 term
    double factorial = 1.0;
    for (Eigen::Index j = 1; j < k; ++j) {
      factorial *= static_cast<double>(j);
      // sup_{t>=0} t^j e^{-delta t} = (j / (e delta))^j
      envelope += std::pow(nn * static_cast<double>(j) / (std::exp(1.0) * delta),
                           static_cast<double>(j)) /
                  factorial;
    }
    const Matrix p_stable = Matrix::Identity(n, n) - axis_sum;
    stable_part = p_stable.operatorNorm() * envelope;
  }

  report.bounded = true;
  report.bound = axis_norms + stable_part;
  report.reason = "all eigenvalues in the closed left half-plane; axis spectrum semisimple";
  return report;
}

}  // namespace ergosplit
