// Copyright (c) 2026 the ergosplit developers
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ergosplit/expm.hpp"
#include "test_support.hpp"

using namespace ergosplit;

TEST_CASE("expm: zero generator gives the identity at any time") {
  const Matrix a = Matrix::Zero(3, 3);
  const Matrix e = expm(a, 7.0);
  CHECK((e - Matrix::Identity(3, 3)).norm() < 1e-14);
}

TEST_CASE("expm: diagonal closed form") {
  Matrix a = Matrix::Zero(2, 2);
  a(0, 0) = Complex(0, 1);
  a(1, 1) = Complex(-1, 0);
  const Matrix e = expm(a, std::numbers::pi);
  CHECK(std::abs(e(0, 0) - Complex(-1, 0)) < 1e-13);
  CHECK(std::abs(e(1, 1) - std::exp(-std::numbers::pi)) < 1e-13);
  CHECK(std::abs(e(0, 1)) < 1e-15);
  CHECK(std::abs(e(1, 0)) < 1e-15);
}

TEST_CASE("expm: matches the truncated power series oracle on unit-norm inputs") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix a = testing::random_matrix(rng, 4, 1.0);
    const Matrix e = expm(a, 1.0);
    const Matrix oracle = testing::expm_series(a, 1.0, 25);
    CHECK((e - oracle).norm() / oracle.norm() < 1e-12);
  }
}

TEST_CASE("expm: semigroup law over sampled times") {
  std::mt19937_64 rng(202);
  std::uniform_real_distribution<double> unif(0.0, 10.0);
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix a = testing::random_matrix(rng, 3 + trial % 3, 2.0);
    const double t = unif(rng), s = unif(rng);
    const Matrix lhs = expm(a, t + s);
    const Matrix rhs = expm(a, t) * expm(a, s);
    CHECK((lhs - rhs).norm() < 1e-10 * std::max(1.0, lhs.norm()));
  }
}

TEST_CASE("expm: accuracy holds at the ||tA|| <= 50 contract edge") {
  std::mt19937_64 rng(303);
  const Matrix a = testing::random_matrix(rng, 4, 1.0);
  // e^{50 A} = (e^{A})^{50}: chain the series oracle to avoid its own truncation error
  Matrix chained = Matrix::Identity(4, 4);
  const Matrix unit = testing::expm_series(a, 1.0, 40);
  for (int i = 0; i < 50; ++i) chained = (chained * unit).eval();
  const Matrix e = expm(a, 50.0);
  CHECK((e - chained).norm() / chained.norm() < 1e-11);
}

TEST_CASE("expm: overflow is an explicit error") {
  Matrix a = Matrix::Zero(1, 1);
  a(0, 0) = Complex(1000.0, 0.0);
  CHECK_THROWS_AS(expm(a, 1.0), ExpOverflowError);
}

TEST_CASE("expm: rejects non-finite inputs") {
  Matrix a = Matrix::Zero(2, 2);
  a(0, 1) = Complex(std::numeric_limits<double>::quiet_NaN(), 0.0);
  CHECK_THROWS_AS(expm(a, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(expm(Matrix::Zero(2, 2), std::numeric_limits<double>::infinity()),
                  std::invalid_argument);
}

TEST_CASE("generators outside the shape contract are rejected") {
  CHECK_THROWS_AS(expm(Matrix::Zero(65, 65), 1.0), std::invalid_argument);
  CHECK_THROWS_AS(expm(Matrix::Zero(2, 3), 1.0), std::invalid_argument);
  CHECK_NOTHROW(expm(Matrix::Zero(64, 64), 1.0));
  CHECK_NOTHROW(expm(Matrix::Zero(1, 1), 1.0));
}
