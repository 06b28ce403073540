// Copyright (c) 2026 the ergosplit developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "ergosplit/signal.hpp"
#include "ergosplit/spectral.hpp"
#include "ergosplit/types.hpp"

namespace ergosplit {

// Bounded matrix semigroup T(t) = e^{tA} with its sun-dual realization
// T_dual(t) = e^{tA^H}. Construction certifies boundedness and caches the
// spectral data; an unbounded generator is rejected.
class MatrixSemigroup {
 public:
  explicit MatrixSemigroup(Matrix generator, double axis_tol = kDefaultAxisTol);

  const Matrix& generator() const { return generator_; }
  Matrix dual_generator() const { return generator_.adjoint(); }
  Eigen::Index dim() const { return generator_.rows(); }
  double bound() const { return certificate_.bound; }
  const BoundednessReport& certificate() const { return certificate_; }
  const SpectralData& spectral() const { return spectral_; }
  double axis_tol() const { return axis_tol_; }

  // true when the whole spectrum sits in the imaginary-axis band, so e^{tA}
  // extends to a bounded group and negative times are admissible
  bool is_group() const { return group_; }

  // sorted distinct imaginary parts of the axis spectrum (the unimodular
  // frequencies of the semigroup); values closer than 1e-7 are merged
  const std::vector<double>& unimodular_frequencies() const { return frequencies_; }

  Vector apply(double t, const Vector& x) const;
  DualVector apply_dual(double t, const DualVector& x_sun) const;

  // orbit function f(t) = <T_dual(t) x_sun, x>, bounded by M ||x|| ||x_sun||
  Signal orbit_function(const Vector& x, const DualVector& x_sun) const;

 private:
  void check_time(double t) const;

  Matrix generator_;
  SpectralData spectral_;
  BoundednessReport certificate_;
  std::vector<double> frequencies_;
  double axis_tol_;
  bool group_ = false;
  bool semisimple_ = false;
};

// Translation (semi)group acting on signals: the integrable side shifts
// right, the bounded-uniformly-continuous side shifts left, and the pairing
// is a window quadrature against the integrable signal's support.
class TranslationSemigroup {
 public:
  enum class Domain { RealLine, HalfLine };

  explicit TranslationSemigroup(Domain domain) : domain_(domain) {}
  Domain domain() const { return domain_; }
  bool is_group() const { return domain_ == Domain::RealLine; }

  // T(t) on the integrable side: support moves right by t
  Signal apply(double t, const Signal& x) const;
  // T_dual(t) on the bounded side: f -> f(. + t)
  Signal apply_dual(double t, const Signal& f) const;

  // <x, f> = integral of x(s) conj(f(s)) over the support window of x,
  // composite Simpson with step h
  Complex pair(const Signal& x_integrable, const Signal& f_bounded, double h = 1.0 / 64) const;

  // orbit function t -> <T_dual(t) f, x>
  Signal orbit_function(const Signal& x_integrable, const Signal& f_bounded,
                        double h = 1.0 / 64) const;

 private:
  Domain domain_;
};

// Truncated sequence-space model: a vector-valued bump train whose n-th
// coordinate is a plateau bump supported on [2^{2n+1}, 2^{2(n+1)}], n >= 2,
// with unit ramps on the end intervals. Coordinates 1..N, index 0 is the
// zero function.
class SequenceSpaceModel {
 public:
  explicit SequenceSpaceModel(int truncation);

  int truncation() const { return truncation_; }

  // value of the vector signal at time t (dimension N, all but at most one
  // coordinate zero)
  Eigen::VectorXd value(double t) const;

  // coordinate k of the translate train as a scalar signal
  Signal coordinate_signal(int k) const;

  // pairing of the translate at shift t against a window probe phi * e_k:
  // integral of phi(s) * g_k(s + t) ds over phi's support
  double translate_pairing(int k, const Signal& window_probe, double shift,
                           double h = 1.0 / 64) const;

 private:
  int truncation_;
};

struct PrecompactnessReport {
  int covering_number = 0;
  int covering_number_half_grid = 0;
  bool is_precompact_evidence = false;
  double epsilon = 0.0;
  int grid_size = 0;
};

// Greedy epsilon-net size of the sampled orbit {T(t)x : t in grid}. A
// covering number that is stable as the grid grows is numerical evidence of
// relative norm compactness of the orbit; growth is evidence against.
PrecompactnessReport orbit_precompactness_probe(const MatrixSemigroup& model, const Vector& x,
                                                const std::vector<double>& grid, double eps);

// Translation variant: distance between translates is the sampled sup norm
// over a window [0, window] with the given sample step.
PrecompactnessReport orbit_precompactness_probe(const TranslationSemigroup& model,
                                                const Signal& x, const std::vector<double>& grid,
                                                double eps, double window = 64.0,
                                                double sample_step = 0.25);

}  // namespace ergosplit
