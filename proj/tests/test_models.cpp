// Copyright (c) 2026 the ergosplit developers
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ergosplit/expm.hpp"
#include "ergosplit/model.hpp"
#include "ergosplit/repro.hpp"
#include "test_support.hpp"

using namespace ergosplit;

namespace {

Matrix diag_c(std::initializer_list<Complex> d) {
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(d.size()), static_cast<Eigen::Index>(d.size()));
  Eigen::Index i = 0;
  for (Complex z : d) m(i, i) = z, ++i;
  return m;
}

}  // namespace

TEST_CASE("matrix model: construction rejects unbounded generators") {
  CHECK_THROWS_AS(MatrixSemigroup{diag_c({Complex(0.5, 0)})}, std::invalid_argument);
  Matrix jordan = Matrix::Zero(2, 2);
  jordan(0, 0) = jordan(1, 1) = Complex(0, 1);
  jordan(0, 1) = Complex(1, 0);
  CHECK_THROWS_AS(MatrixSemigroup{jordan}, std::invalid_argument);
}

TEST_CASE("apply: time zero is the identity, diagonal closed forms hold") {
  const MatrixSemigroup model(diag_c({Complex(0, 1)}));
  Vector x(1);
  x(0) = Complex(1, 0);
  CHECK((model.apply(0.0, x) - x).norm() < 1e-15);
  const Vector y = model.apply(std::numbers::pi / 2, x);
  CHECK(std::abs(y(0) - Complex(0, 1)) < 1e-13);
}

TEST_CASE("apply: rotation block quarter and half turns, cross-checked against expm") {
  Matrix a = Matrix::Zero(2, 2);
  a(0, 1) = Complex(-1, 0);
  a(1, 0) = Complex(1, 0);
  const MatrixSemigroup model(a);
  Vector x(2);
  x << Complex(1, 0), Complex(0, 0);
  const Vector y = model.apply(std::numbers::pi, x);
  CHECK(std::abs(y(0) - Complex(-1, 0)) < 1e-12);
  CHECK(std::abs(y(1)) < 1e-12);
  CHECK((y - expm(a, std::numbers::pi) * x).norm() < 1e-14);
}

TEST_CASE("apply_dual: conjugate transpose realization") {
  const MatrixSemigroup model(diag_c({Complex(0, 1)}));
  DualVector xs(1);
  xs(0) = Complex(1, 0);
  CHECK((model.apply_dual(0.0, xs) - xs).norm() < 1e-15);
  const DualVector ys = model.apply_dual(std::numbers::pi / 2, xs);
  CHECK(std::abs(ys(0) - Complex(0, -1)) < 1e-13);
}

TEST_CASE("duality identity holds to machine precision on random bounded models") {
  std::mt19937_64 rng(606);
  for (int trial = 0; trial < 50; ++trial) {
    const auto oracle = testing::random_bounded_model(rng, 3, 1);
    const MatrixSemigroup model(oracle.a);
    const Vector x = testing::random_vector(rng, 3);
    const DualVector xs = testing::random_vector(rng, 3);
    const double t = 1.7;
    const Complex lhs = pairing(model.apply(t, x), xs);
    const Complex rhs = pairing(x, model.apply_dual(t, xs));
    CHECK(std::abs(lhs - rhs) <= 1e-12 * x.norm() * xs.norm());
  }
}

TEST_CASE("negative time: group models only") {
  const MatrixSemigroup group(diag_c({Complex(0, 1), Complex(0, -2)}));
  CHECK(group.is_group());
  CHECK_NOTHROW(group.apply(-3.0, Vector::Ones(2)));

  const MatrixSemigroup semi(diag_c({Complex(0, 1), Complex(-1, 0)}));
  CHECK_FALSE(semi.is_group());
  CHECK_THROWS_AS(semi.apply(-0.5, Vector::Ones(2)), std::domain_error);
}

TEST_CASE("boundedness: orbit norm dominated by the certified bound") {
  std::mt19937_64 rng(707);
  const auto oracle = testing::random_bounded_model(rng, 4, 2);
  const MatrixSemigroup model(oracle.a);
  const Vector x = testing::random_vector(rng, 4);
  for (double t : {0.0, 1.0, 10.0, 100.0, 1000.0})
    CHECK(model.apply(t, x).norm() <= model.bound() * x.norm() * (1 + 1e-9));
}

TEST_CASE("orbit_function: zero vectors give the zero signal") {
  const MatrixSemigroup model(diag_c({Complex(0, 1), Complex(-1, 0)}));
  const Signal f = model.orbit_function(Vector::Zero(2), Vector::Ones(2));
  for (double t : {0.0, 1.0, 5.0}) CHECK(std::abs(f(t)) < 1e-14);
}

TEST_CASE("orbit_function: diagonal closed forms") {
  const MatrixSemigroup m1(diag_c({Complex(0, 1)}));
  const Signal f1 = m1.orbit_function(Vector::Ones(1), Vector::Ones(1));
  for (double t : {0.0, 0.7, 2.5, 10.0})
    CHECK(std::abs(f1(t) - std::polar(1.0, -t)) < 1e-12);

  const MatrixSemigroup m2(diag_c({Complex(0, 0), Complex(-1, 0)}));
  const Signal f2 = m2.orbit_function(Vector::Ones(2), Vector::Ones(2));
  for (double t : {0.0, 0.3, 1.0, 4.0})
    CHECK(std::abs(f2(t) - Complex(1.0 + std::exp(-t), 0.0)) < 1e-12);
}

TEST_CASE("orbit_function: semigroup law through the dual argument") {
  std::mt19937_64 rng(808);
  for (int trial = 0; trial < 20; ++trial) {
    const auto oracle = testing::random_bounded_model(rng, 3, 1);
    const MatrixSemigroup model(oracle.a);
    const Vector x = testing::random_vector(rng, 3);
    const DualVector xs = testing::random_vector(rng, 3);
    const double t = 0.9, s = 2.3;
    const Signal f = model.orbit_function(x, xs);
    const Signal shifted = model.orbit_function(x, model.apply_dual(s, xs));
    CHECK(std::abs(f(t + s) - shifted(t)) < 1e-10 * std::max(1.0, std::abs(f(t + s))));
  }
}

TEST_CASE("orbit_function: defective stable generator takes the exponential path") {
  Matrix a = Matrix::Zero(2, 2);
  a(0, 0) = a(1, 1) = Complex(-1, 0);
  a(0, 1) = Complex(1, 0);
  const MatrixSemigroup model(a);
  Vector x = Vector::Ones(2);
  DualVector xs = Vector::Unit(2, 0);
  const Signal f = model.orbit_function(x, xs);
  // e^{tA^H} e_1 = e^{-t} (1, t), paired against (1, 1)
  for (double t : {0.0, 0.5, 2.0, 9.0})
    CHECK(std::abs(f(t) - std::exp(-t) * (1.0 + t)) < 1e-12);
}

TEST_CASE("orbit_function bound respects M ||x|| ||x_sun||") {
  const MatrixSemigroup model(diag_c({Complex(0, 1), Complex(-0.5, 2)}));
  Vector x = Vector::Ones(2);
  const Signal f = model.orbit_function(x, x);
  CHECK(f.bound() <= model.bound() * x.norm() * x.norm() + 1e-12);
  CHECK_NOTHROW(f(3.14));
}

TEST_CASE("precompactness probe: unimodular orbit matches the circle covering oracle") {
  const MatrixSemigroup model(diag_c({Complex(0, 1)}));
  Vector x(1);
  x(0) = Complex(1, 0);
  std::vector<double> grid;
  for (int i = 0; i < 2048; ++i) grid.push_back(0.1 * i);
  const double eps = 0.1;
  const PrecompactnessReport rep = orbit_precompactness_probe(model, x, grid, eps);
  // a set of pairwise > eps separated points on the unit circle has at most
  // 2 pi / (2 asin(eps/2)) elements
  const int circle_cap =
      static_cast<int>(std::ceil(2 * std::numbers::pi / (2 * std::asin(eps / 2))));
  CHECK(rep.covering_number <= circle_cap);
  CHECK(rep.is_precompact_evidence);
}

TEST_CASE("precompactness probe: zero vector needs one ball") {
  const MatrixSemigroup model(diag_c({Complex(0, 1), Complex(-1, 0)}));
  const PrecompactnessReport rep =
      orbit_precompactness_probe(model, Vector::Zero(2), {0.0, 1.0, 2.0, 3.0}, 0.1);
  CHECK(rep.covering_number == 1);
  CHECK(rep.is_precompact_evidence);
}

TEST_CASE("precompactness probe: log-sine translates keep needing new balls") {
  const TranslationSemigroup model(TranslationSemigroup::Domain::RealLine);
  const Signal f = make_log_sine_signal();
  // geometric shifts far beyond the window: the translates look like the
  // slowly drifting constants sin(ln s). Launching the phase sweep at 3pi/2
  // keeps sin monotone across the whole grid, so every stretch of shifts
  // produces genuinely new values and the greedy net keeps growing.
  const double start = std::exp(3 * std::numbers::pi / 2 + 4 * std::numbers::pi);
  std::vector<double> grid;
  for (int i = 0; i < 64; ++i) grid.push_back(start * std::exp(3.0 / 64 * i));
  const PrecompactnessReport rep = orbit_precompactness_probe(model, f, grid, 0.5);
  CHECK(rep.covering_number > rep.covering_number_half_grid);
  CHECK_FALSE(rep.is_precompact_evidence);
}

TEST_CASE("translation model: duality of the shift pairing") {
  const TranslationSemigroup model(TranslationSemigroup::Domain::HalfLine);
  const Signal probe = Signal::from_function(
      [](double s) { return Complex(s >= 0 && s <= 2 ? s * (2 - s) : 0.0, 0.0); }, 1.0,
      "bump", 0.0, 2.0);
  const Signal f = Signal::sine_sum({1.0});
  for (double t : {0.3, 1.3, 2.7, 10.0}) {
    const Complex lhs = model.pair(model.apply(t, probe), f);
    const Complex rhs = model.pair(probe, model.apply_dual(t, f));
    CHECK(std::abs(lhs - rhs) <= 1e-12);
  }
  CHECK_THROWS_AS(model.apply(-1.0, probe), std::domain_error);
}

TEST_CASE("signal: declared bound is checked on evaluation") {
  const Signal liar = Signal::from_function([](double t) { return Complex(t, 0.0); }, 1.0, "liar");
  CHECK_NOTHROW(liar(0.5));
  CHECK_THROWS_AS(liar(3.0), std::runtime_error);

  const Signal tab = Signal::tabulated({0.0, 1.0, 2.0}, {Complex(0, 0), Complex(1, 0), Complex(0, 0)}, 1.0);
  CHECK(tab(0.5) == Complex(0.5, 0.0));  // linear interpolation
  CHECK(tab(5.0) == Complex(0.0, 0.0));  // zero outside the window
  CHECK(tab.has_support());
}

TEST_CASE("sequence-space model: coordinate bumps sit on disjoint supports") {
  const SequenceSpaceModel model(6);
  CHECK_THROWS_AS(SequenceSpaceModel(1), std::invalid_argument);
  // plateau midpoint of coordinate 2: [2^5, 2^6] ramps at ends
  const Eigen::VectorXd mid = model.value(48.0);
  CHECK(mid(1) == doctest::Approx(1.0));
  CHECK(mid.sum() == doctest::Approx(1.0));
  // ramp start is zero
  CHECK(model.value(32.0)(1) == doctest::Approx(0.0));
  // below the first support
  CHECK(model.value(7.9).norm() == doctest::Approx(0.0));
}

TEST_CASE("sequence-space model: translate pairing rides the plateau and dies past it") {
  const SequenceSpaceModel model(6);
  const Signal probe = Signal::from_function(
      [](double s) { return Complex(s >= 0 && s <= 1 ? 1.0 - std::abs(2.0 * s - 1.0) : 0.0, 0.0); },
      1.0, "unit_hat", 0.0, 1.0);
  CHECK(model.translate_pairing(2, probe, 40.0) == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(model.translate_pairing(2, probe, 1.0e4) == doctest::Approx(0.0));
  CHECK(model.translate_pairing(3, probe, 200.0) == doctest::Approx(0.5).epsilon(1e-6));
}
