// Copyright (c) 2026 the ergosplit developers
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ergosplit/repro.hpp"
#include "ergosplit/wap.hpp"
#include "test_support.hpp"

using namespace ergosplit;

TEST_CASE("sequence families: validation and overflow caps") {
  CHECK_THROWS_AS(SequenceFamily::exponential(0.0, 0, 200), FamilyRangeError);
  CHECK_THROWS_AS(SequenceFamily::power16(0, 80), FamilyRangeError);
  CHECK_THROWS_AS(SequenceFamily::arithmetic(0.0, -1.0, 0, 5), FamilyRangeError);
  CHECK_THROWS_AS(SequenceFamily::explicit_list({3.0, 2.0}), FamilyRangeError);
  const SequenceFamily f = SequenceFamily::power16(0, 8, 4);
  CHECK(f.indices() == std::vector<int>{0, 4, 8});
  CHECK(f.value(2) == doctest::Approx(256.0));
}

TEST_CASE("double_limit_probe: constant signals are consistent") {
  const Signal c = Signal::constant(Complex(0.4, -0.1));
  const auto rep = double_limit_probe(c, SequenceFamily::exponential(0.0, 0, 40),
                                      SequenceFamily::exponential(std::numbers::pi, 0, 40));
  CHECK(rep.verdict == DoubleLimitVerdict::Consistent);
  REQUIRE(rep.nu);
  REQUIRE(rep.mu);
  CHECK(std::abs(*rep.nu - Complex(0.4, -0.1)) < 1e-9);
  CHECK(rep.discrepancy < 1e-9);
}

TEST_CASE("double_limit_probe: log-sine violation with the asymptotic oracle values") {
  const Signal f = make_log_sine_signal();
  const auto rep = double_limit_probe(f, SequenceFamily::exponential(std::numbers::pi / 2, 0, 40),
                                      SequenceFamily::exponential(3 * std::numbers::pi / 2, 0, 40));
  // dominant-index oracle: sin(ln(e^a + e^b + 1)) -> sin(max-side phase)
  REQUIRE(rep.nu);
  REQUIRE(rep.mu);
  CHECK(std::abs(*rep.nu - Complex(1, 0)) < 1e-6);
  CHECK(std::abs(*rep.mu - Complex(-1, 0)) < 1e-6);
  CHECK(rep.discrepancy == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(rep.verdict == DoubleLimitVerdict::Violation);
}

TEST_CASE("double_limit_probe: 16-power pair exposes the windowed product, exactly") {
  const Signal h = make_windowed_binary_log_sine_signal();
  const auto rep = double_limit_probe(h, SequenceFamily::power16(0, 28, 4),
                                      SequenceFamily::power16_shift(0, 28, 4));
  REQUIRE(rep.nu);
  REQUIRE(rep.mu);
  CHECK(std::abs(*rep.nu) < 1e-4);                  // inner limit along t_{4m}: 0
  CHECK(std::abs(*rep.mu - Complex(1, 0)) < 1e-4);  // inner limit along s_{4k}: 1
  CHECK(rep.verdict == DoubleLimitVerdict::Violation);
}

TEST_CASE("double_limit_probe: violation persists under index-range perturbation") {
  const Signal f = make_log_sine_signal();
  const auto rep = double_limit_probe(f, SequenceFamily::exponential(std::numbers::pi / 2, 2, 40),
                                      SequenceFamily::exponential(3 * std::numbers::pi / 2, 2, 40));
  CHECK(rep.verdict == DoubleLimitVerdict::Violation);
  CHECK(rep.discrepancy >= 0.9);

  // same for the 16-power pair: shifting m_min by +2 moves the stride-4
  // subsequences into other residue classes but the tails still separate
  const Signal h = make_windowed_binary_log_sine_signal();
  const auto rep16 = double_limit_probe(h, SequenceFamily::power16(2, 28, 4),
                                        SequenceFamily::power16_shift(2, 28, 4));
  CHECK(rep16.verdict == DoubleLimitVerdict::Violation);
  CHECK(rep16.discrepancy >= 0.9);
}

TEST_CASE("double_limit_probe: oscillation that never settles is inconclusive, not a violation") {
  const Signal s = Signal::sine_sum({1.0});
  const auto rep = double_limit_probe(s, SequenceFamily::exponential(0.0, 0, 40),
                                      SequenceFamily::exponential(0.0, 0, 40));
  CHECK(rep.verdict == DoubleLimitVerdict::Inconclusive);
}

TEST_CASE("wap_verdict: the log-sine signal is caught by the default bank") {
  const WapSearchResult res = wap_verdict(make_log_sine_signal(), default_family_bank());
  CHECK(res.verdict == WapVerdict::ViolationFound);
  REQUIRE(res.counterexample);
  CHECK(res.counterexample->discrepancy > 0.5);
}

TEST_CASE("wap_verdict: windowed product is caught by the stride-4 16-power pair") {
  const WapSearchResult res = wap_verdict(make_windowed_binary_log_sine_signal(),
                                          default_family_bank());
  CHECK(res.verdict == WapVerdict::ViolationFound);
}

TEST_CASE("wap_verdict: almost periodic controls yield no violation") {
  CHECK(wap_verdict(Signal::sine_sum({1.0, std::numbers::sqrt2}), default_family_bank()).verdict ==
        WapVerdict::NoViolationFound);
  CHECK(wap_verdict(Signal::trig_polynomial({{Complex(1, 0), 1.0}}), default_family_bank())
            .verdict == WapVerdict::NoViolationFound);
  CHECK(wap_verdict(Signal::constant(Complex(0, 0)), default_family_bank()).verdict ==
        WapVerdict::NoViolationFound);
}

TEST_CASE("property: no control trig polynomial triggers a violation on the bank") {
  std::mt19937_64 rng(1414);
  std::uniform_real_distribution<double> unif(-3.0, 3.0);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::pair<Complex, double>> terms;
    for (int k = 0; k < 3; ++k)
      terms.emplace_back(Complex(unif(rng), unif(rng)) / 3.0, unif(rng));
    const Signal control = Signal::trig_polynomial(terms);
    for (const auto& [fa, fb] : default_family_bank()) {
      const auto rep = double_limit_probe(control, fa, fb);
      CHECK(rep.verdict != DoubleLimitVerdict::Violation);
      if (rep.verdict == DoubleLimitVerdict::Consistent) CHECK(rep.discrepancy <= 1e-4);
    }
  }
}

TEST_CASE("bohr_coefficient: constant signal at frequency zero") {
  const LimitEstimate est = bohr_coefficient(Signal::constant(Complex(2.5, 0.5)), 0.0);
  CHECK(std::abs(est.scalar() - Complex(2.5, 0.5)) < 1e-9);
  CHECK(est.converged);
}

TEST_CASE("bohr_coefficient: plain sine has coefficient 1/(2i) at frequency one") {
  const Signal f = Signal::sine_sum({1.0});
  const LimitEstimate est = bohr_coefficient(f, 1.0, Schedule{16, 14}, 1e-4);
  CHECK(std::abs(est.scalar() - Complex(0, -0.5)) < 1e-3);
  CHECK(std::abs(std::abs(est.scalar()) - 0.5) < 1e-3);
}

TEST_CASE("bohr_coefficient: incommensurate pair resolves both lines and rejects off-lines") {
  const Signal f = Signal::sine_sum({1.0, std::numbers::sqrt2});
  const LimitEstimate at_sqrt2 = bohr_coefficient(f, std::numbers::sqrt2, Schedule{16, 14}, 1e-4);
  CHECK(std::abs(std::abs(at_sqrt2.scalar()) - 0.5) < 1e-3);
  const LimitEstimate off = bohr_coefficient(f, 0.7, Schedule{16, 14}, 1e-4);
  CHECK(std::abs(off.scalar()) < 1e-3);
}

TEST_CASE("property: bohr_coefficient is linear on controls") {
  const Signal f = Signal::sine_sum({1.0});
  const Signal g = Signal::trig_polynomial({{Complex(0.3, 0.1), 1.0}, {Complex(0, 0.2), -2.0}});
  const Complex alpha(1.5, -0.5);
  const Signal combo = Signal::combination({{alpha, f}, {Complex(1, 0), g}});
  // a tiny tol keeps every run on the full schedule, so all three signals
  // integrate over the same horizon and linearity holds to roundoff
  const Schedule sched{16, 10};
  for (double w : {1.0, -2.0, 0.0}) {
    const Complex lhs = bohr_coefficient(combo, w, sched, 1e-13).scalar();
    const Complex rhs = alpha * bohr_coefficient(f, w, sched, 1e-13).scalar() +
                        bohr_coefficient(g, w, sched, 1e-13).scalar();
    CHECK(std::abs(lhs - rhs) < 1e-6);
  }
}

TEST_CASE("cross-module: bohr coefficient of an orbit function meets the weighted mean") {
  std::mt19937_64 rng(5150);
  const auto oracle = testing::random_bounded_model(rng, 3, 2, 0.6);
  const MatrixSemigroup model(oracle.a);
  const Vector x = testing::random_vector(rng, 3);
  const DualVector xs = testing::random_vector(rng, 3);
  const Signal f = model.orbit_function(x, xs);
  for (double w : model.unimodular_frequencies()) {
    const Complex a = bohr_coefficient(f, -w, Schedule{16, 12}, 2e-4).scalar();
    const Vector sw = weighted_mean(model, x, w, Schedule{16, 13}, 1e-6).value;
    CHECK(std::abs(a - pairing(xs, sw)) < 1e-3);
  }
}

TEST_CASE("ap_probe: periodic signal shows all multiples of its period") {
  const Signal f = Signal::sine_sum({1.0});
  const ApProbeReport rep = ap_probe(f, 0.05, 100.0, 8.0);
  CHECK(rep.relatively_dense_evidence);
  REQUIRE(!rep.epsilon_periods.empty());
  // every found period is close to a multiple of 2 pi
  for (double tau : rep.epsilon_periods) {
    const double frac = std::remainder(tau, 2 * std::numbers::pi);
    CHECK(std::abs(frac) < 0.06);
  }
}

TEST_CASE("ap_probe: two incommensurate lines stay relatively dense") {
  const Signal f = Signal::sine_sum({1.0, std::numbers::sqrt2});
  const ApProbeReport rep = ap_probe(f, 0.1, 1e4, 2500.0);
  CHECK(!rep.epsilon_periods.empty());
  CHECK(rep.relatively_dense_evidence);
}

TEST_CASE("ap_probe: log-sine gaps grow with the horizon") {
  const Signal f = make_log_sine_signal();
  const ApProbeReport rep = ap_probe(f, 0.1, 1e4, 2500.0);
  CHECK_FALSE(rep.relatively_dense_evidence);
}
