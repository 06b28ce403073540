// Copyright (c) 2026 the ergosplit developers
// SPDX-License-Identifier: Apache-2.0

#include "ergosplit/model.hpp"

#include <algorithm>
#include <cmath>

#include "ergosplit/expm.hpp"
#include "ergosplit/repro.hpp"

namespace ergosplit {

MatrixSemigroup::MatrixSemigroup(Matrix generator, double axis_tol)
    : generator_(std::move(generator)), axis_tol_(axis_tol) {
  validate_generator(generator_);
  spectral_ = eig(generator_, axis_tol_);
  certificate_ = certify_bounded(generator_, spectral_, axis_tol_);
  if (!certificate_.bounded)
    throw std::invalid_argument("MatrixSemigroup: generator is not the generator of a bounded "
                                "semigroup (" + certificate_.reason + ")");

  group_ = true;
  semisimple_ = !spectral_.any_defective();
  std::vector<double> freqs;
  for (std::size_t i = 0; i < spectral_.eigenvalues.size(); ++i) {
    if (std::abs(spectral_.eigenvalues[i].real()) <= axis_tol_)
      freqs.push_back(spectral_.eigenvalues[i].imag());
    else
      group_ = false;
  }
  std::sort(freqs.begin(), freqs.end());
  for (double w : freqs) {
    if (frequencies_.empty() || w - frequencies_.back() > 1e-7) frequencies_.push_back(w);
  }
}

void MatrixSemigroup::check_time(double t) const {
  if (t < 0 && !group_)
    throw std::domain_error("MatrixSemigroup: negative time on a semigroup-only model");
}

Vector MatrixSemigroup::apply(double t, const Vector& x) const {
  check_time(t);
  if (x.size() != dim()) throw std::invalid_argument("apply: dimension mismatch");
  return expm(generator_, t) * x;
}

DualVector MatrixSemigroup::apply_dual(double t, const DualVector& x_sun) const {
  check_time(t);
  if (x_sun.size() != dim()) throw std::invalid_argument("apply_dual: dimension mismatch");
  // e^{tA^H} = (e^{tA})^H; using the adjoint of the same computed exponential
  // keeps the duality identity exact to rounding
  return expm(generator_, t).adjoint() * x_sun;
}

Signal MatrixSemigroup::orbit_function(const Vector& x, const DualVector& x_sun) const {
  const double bound = certificate_.bound * x.norm() * x_sun.norm();
  if (semisimple_) {
    // f(t) = <e^{tA^H} x_sun, x> = sum_i e^{t conj(lambda_i)} (P_i x)^H x_sun
    std::vector<std::pair<Complex, Complex>> terms;  // (coefficient, conj eigenvalue)
    for (std::size_t i = 0; i < spectral_.eigenvalues.size(); ++i) {
      const Complex coeff = (spectral_.projectors[i] * x).dot(x_sun);
      terms.emplace_back(coeff, std::conj(spectral_.eigenvalues[i]));
    }
    return Signal::from_function(
        [terms](double t) {
          Complex acc(0, 0);
          for (const auto& [c, lam] : terms) acc += c * std::exp(lam * t);
          return acc;
        },
        bound, "orbit_function");
  }
  // defective generators fall back to the matrix exponential per evaluation
  const Matrix dual_gen = generator_.adjoint();
  const Vector xv = x;
  const DualVector xs = x_sun;
  return Signal::from_function(
      [dual_gen, xv, xs](double t) { return pairing(expm(dual_gen, t) * xs, xv); }, bound,
      "orbit_function");
}

namespace {

// composite Simpson of a complex integrand over [a, b] with ~|b-a|/h panels
template <typename F>
Complex simpson(F&& f, double a, double b, double h) {
  long n = std::lround(std::ceil((b - a) / h));
  if (n < 2) n = 2;
  if (n % 2) ++n;
  const double step = (b - a) / static_cast<double>(n);
  Complex acc = f(a) + f(b);
  for (long k = 1; k < n; ++k)
    acc += f(a + step * static_cast<double>(k)) * ((k % 2) ? 4.0 : 2.0);
  return acc * (step / 3.0);
}

}  // namespace

Signal TranslationSemigroup::apply(double t, const Signal& x) const {
  if (t < 0 && !is_group())
    throw std::domain_error("TranslationSemigroup: negative time on the half-line model");
  const Signal inner = x;
  const auto shifted = [inner, t](double s) { return s >= t ? inner(s - t) : Complex(0, 0); };
  const std::string name = "translate(" + x.descriptor() + ")";
  if (x.has_support()) {
    const auto [lo, hi] = x.support();
    return Signal::from_function(shifted, x.bound(), name, lo + t, hi + t);
  }
  return Signal::from_function(shifted, x.bound(), name);
}

Signal TranslationSemigroup::apply_dual(double t, const Signal& f) const {
  if (t < 0 && !is_group())
    throw std::domain_error("TranslationSemigroup: negative time on the half-line model");
  const Signal inner = f;
  return Signal::from_function([inner, t](double s) { return inner(s + t); }, f.bound(),
                               "translate_dual(" + f.descriptor() + ")");
}

Complex TranslationSemigroup::pair(const Signal& x_integrable, const Signal& f_bounded,
                                   double h) const {
  if (!x_integrable.has_support())
    throw std::invalid_argument("TranslationSemigroup::pair: integrable side needs a declared "
                                "support window");
  const auto [lo, hi] = x_integrable.support();
  return simpson([&](double s) { return x_integrable(s) * std::conj(f_bounded(s)); }, lo, hi, h);
}

Signal TranslationSemigroup::orbit_function(const Signal& x_integrable, const Signal& f_bounded,
                                            double h) const {
  const double width = x_integrable.has_support()
                           ? x_integrable.support().second - x_integrable.support().first
                           : 0.0;
  const double bound = x_integrable.bound() * f_bounded.bound() * std::max(width, 1.0);
  const TranslationSemigroup self = *this;
  const Signal xi = x_integrable, fb = f_bounded;
  return Signal::from_function(
      [self, xi, fb, h](double t) { return self.pair(xi, self.apply_dual(t, fb), h); }, bound,
      "orbit_function");
}

SequenceSpaceModel::SequenceSpaceModel(int truncation) : truncation_(truncation) {
  if (truncation < 2) throw std::invalid_argument("SequenceSpaceModel: truncation must be >= 2");
  // ramp endpoints 2^{2n+1} + 1 need exact integer doubles
  if (truncation > 24) throw std::invalid_argument("SequenceSpaceModel: truncation must be <= 24");
}

Eigen::VectorXd SequenceSpaceModel::value(double t) const {
  return bump_coordinates(t, truncation_);
}

Signal SequenceSpaceModel::coordinate_signal(int k) const {
  if (k < 1 || k > truncation_)
    throw std::invalid_argument("SequenceSpaceModel: coordinate out of range");
  const int n = truncation_;
  return Signal::from_function(
      [k, n](double t) { return Complex(bump_coordinates(t, n)(k - 1), 0.0); }, 1.0,
      "bump_coordinate(" + std::to_string(k) + ")");
}

double SequenceSpaceModel::translate_pairing(int k, const Signal& window_probe, double shift,
                                             double h) const {
  if (!window_probe.has_support())
    throw std::invalid_argument("SequenceSpaceModel: probe needs a support window");
  const auto [lo, hi] = window_probe.support();
  const Signal coord = coordinate_signal(k);
  const Complex v =
      simpson([&](double s) { return window_probe(s) * std::conj(coord(s + shift)); }, lo, hi, h);
  return v.real();
}

namespace {

// greedy net: a point farther than eps from every center becomes a center
template <typename DistFn>
int greedy_covering(int count, DistFn&& dist_to_center, std::vector<int>& centers, double eps) {
  for (int i = 0; i < count; ++i) {
    bool covered = false;
    for (int c : centers) {
      if (dist_to_center(i, c) <= eps) {
        covered = true;
        break;
      }
    }
    if (!covered) centers.push_back(i);
  }
  return static_cast<int>(centers.size());
}

}  // namespace

PrecompactnessReport orbit_precompactness_probe(const MatrixSemigroup& model, const Vector& x,
                                                const std::vector<double>& grid, double eps) {
  if (eps <= 0) throw std::invalid_argument("orbit_precompactness_probe: eps must be positive");
  std::vector<Vector> points;
  points.reserve(grid.size());
  for (double t : grid) points.push_back(model.apply(t, x));

  const auto dist = [&](int i, int c) { return (points[i] - points[c]).norm(); };
  PrecompactnessReport rep;
  rep.epsilon = eps;
  rep.grid_size = static_cast<int>(grid.size());
  std::vector<int> centers;
  rep.covering_number_half_grid =
      greedy_covering(static_cast<int>(grid.size()) / 2, dist, centers, eps);
  rep.covering_number = greedy_covering(static_cast<int>(grid.size()), dist, centers, eps);
  rep.is_precompact_evidence = rep.covering_number <= rep.covering_number_half_grid;
  return rep;
}

PrecompactnessReport orbit_precompactness_probe(const TranslationSemigroup& model, const Signal& x,
                                                const std::vector<double>& grid, double eps,
                                                double window, double sample_step) {
  if (eps <= 0) throw std::invalid_argument("orbit_precompactness_probe: eps must be positive");
  const int samples = static_cast<int>(window / sample_step) + 1;
  std::vector<std::vector<Complex>> points;
  points.reserve(grid.size());
  for (double t : grid) {
    const Signal translate = model.apply_dual(t, x);
    std::vector<Complex> row(samples);
    for (int j = 0; j < samples; ++j) row[j] = translate(sample_step * j);
    points.push_back(std::move(row));
  }
  const auto dist = [&](int i, int c) {
    double d = 0.0;
    for (int j = 0; j < samples; ++j) d = std::max(d, std::abs(points[i][j] - points[c][j]));
    return d;
  };
  PrecompactnessReport rep;
  rep.epsilon = eps;
  rep.grid_size = static_cast<int>(grid.size());
  std::vector<int> centers;
  rep.covering_number_half_grid =
      greedy_covering(static_cast<int>(grid.size()) / 2, dist, centers, eps);
  rep.covering_number = greedy_covering(static_cast<int>(grid.size()), dist, centers, eps);
  rep.is_precompact_evidence = rep.covering_number <= rep.covering_number_half_grid;
  return rep;
}

}  // namespace ergosplit
