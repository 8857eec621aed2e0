// Copyright 2026 The spinent Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinent/ideal_model.hpp"

#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "oracles.hpp"
#include "spinent/entanglement.hpp"
#include "spinent/grid.hpp"

using namespace spinent;
using oracle::cd;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr auto U = Spin::Up;
constexpr auto D = Spin::Down;

// Largest p_down with eof >= target, from the closed-form reduction
// p_down = 1 - u^4, C = 2u / (1 + u^2), u = |cos 2jt|, solved to 40 digits with mpmath.
constexpr double kBestPAtE099 = 0.3766244033050081;
constexpr double kBestPAtE084 = 0.8646089155028140;
constexpr double kJtAtE084 = 0.4595140151500105;

double max_abs_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace

TEST(ExchangeUnitary, ZeroTimeIsIdentity) {
  EXPECT_LT(max_abs_diff(exchange_unitary(0.0), identity<double>(4)), 1e-15);
}

TEST(ExchangeUnitary, QuarterPiIsSwapUpToPhase) {
  const auto u = exchange_unitary(kPi / 4);
  const cd phase = std::exp(cd(0, -kPi / 4));
  EXPECT_LT(max_abs_diff(u, phase * swap_gate<double>()), 1e-15);
  const auto out = apply_on_sites(u, {0, 1}, basis_state({U, D}));
  EXPECT_LT(max_abs_diff(out, phase * basis_state({D, U})), 1e-15);
}

TEST(ExchangeUnitary, MatchesMatrixExponentialOracles) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> angle(-10.0, 10.0);
  for (int k = 0; k < 200; ++k) {
    const double jt = angle(rng);
    const auto u = exchange_unitary(jt);
    EXPECT_LT(max_abs_diff(u, oracle::exchange_unitary_expm(jt)), 1e-12) << "jt = " << jt;
    EXPECT_LT(max_abs_diff(u, oracle::exchange_unitary_spectral(jt)), 1e-12) << "jt = " << jt;
    EXPECT_LT(max_abs_diff(u.adjoint() * u, identity<double>(4)), 1e-12);
  }
}

TEST(ExchangeUnitary, Eigenphases) {
  const double jt = 0.3;
  const auto u = exchange_unitary(jt);
  const auto singlet = bell_psi_minus<double>();
  EXPECT_LT(max_abs_diff(u * singlet, std::exp(cd(0, 3 * jt)) * singlet), 1e-15);
  for (const StateVector<double>& triplet :
       {basis_state({U, U}), basis_state({D, D}), bell_psi_plus<double>()}) {
    EXPECT_LT(max_abs_diff(u * triplet, std::exp(cd(0, -jt)) * triplet), 1e-15);
  }
  EXPECT_THROW(exchange_unitary(std::nan("")), std::invalid_argument);
}

TEST(ClosedFormCoefficients, SpecialAngles) {
  const auto c0 = closed_form_coefficients(0.0);
  EXPECT_LT(std::abs(c0.alpha - 2.0), 1e-15);
  EXPECT_LT(std::abs(c0.beta), 1e-15);
  EXPECT_LT(std::abs(c0.gamma), 1e-15);

  const auto c4 = closed_form_coefficients(kPi / 4);
  EXPECT_LT(std::abs(c4.alpha), 1e-15);
  EXPECT_LT(std::abs(c4.beta - 2.0), 1e-15);
  EXPECT_LT(std::abs(c4.gamma), 1e-15);

  const auto c8 = closed_form_coefficients(kPi / 8);
  EXPECT_LT(std::abs(c8.alpha - cd(0, 1)), 1e-15);
  EXPECT_LT(std::abs(c8.beta - cd(1, -1)), 1e-15);
  EXPECT_LT(std::abs(c8.gamma - 1.0), 1e-15);
  EXPECT_LT(std::abs(c8.global_phase - std::exp(cd(0, -kPi / 4)) / 2.0), 1e-15);
}

TEST(ClosedFormCoefficients, InvariantsOnGrid) {
  for (double jt : uniform_grid(-2.0, 2.0, 997)) {
    const auto c = closed_form_coefficients(jt);
    EXPECT_NEAR(std::norm(c.alpha) + std::norm(c.beta) + std::norm(c.gamma), 4.0, 1e-12);
    const cd e4 = std::exp(cd(0, 4 * jt));
    EXPECT_LT(std::abs(c.gamma - c.beta * (1.0 + e4) / 2.0), 1e-12);
  }
}

TEST(SimulateSequential, ZeroAngleIsIdentity) {
  const auto s = basis_state({U, D, D});
  EXPECT_LT(max_abs_diff(simulate_sequential(s, 0.0, 2), s), 1e-15);
}

TEST(SimulateSequential, MatchesClosedFormOnGrid) {
  const auto initial = basis_state({U, D, D});
  double worst = 0.0;
  for (double jt : uniform_grid(0.0, kPi / 2, 1000)) {
    const auto simulated = simulate_sequential(initial, jt, 2);
    const auto closed = closed_form_state(closed_form_coefficients(jt));
    worst = std::max(worst, max_abs_diff(simulated, closed));
  }
  EXPECT_LT(worst, 1e-12);
}

TEST(SimulateSequential, FullSwapLeavesTheUpSpinOnTheFirstImpurity) {
  // After the first SWAP the electron is down and commutes with the remaining down spins.
  const auto out = simulate_sequential(basis_state({U, D, D, D}), kPi / 4, 3);
  const auto target = basis_state({D, U, D, D});
  const cd overlap = target.dot(out);
  EXPECT_NEAR(std::abs(overlap), 1.0, 1e-14);
  EXPECT_LT(max_abs_diff(out, overlap * target), 1e-14);
}

TEST(SimulateSequential, SiteCountMismatch) {
  EXPECT_THROW(simulate_sequential(basis_state({U, D, D}), 0.1, 3), std::invalid_argument);
  EXPECT_THROW(simulate_sequential(basis_state({U, D, D}), 0.1, 0), std::invalid_argument);
}

TEST(IdealPoint, PiOverEight) {
  const auto p = ideal_point(kPi / 8);
  EXPECT_NEAR(p.p_down, 0.75, 1e-15);
  EXPECT_NEAR(p.concurrence, 2 * std::sqrt(2.0) / 3, 1e-15);
  EXPECT_NEAR(p.concurrence, 0.942809, 1e-6);
  EXPECT_NEAR(p.eof, 0.9182958340544895, 1e-12);
}

TEST(IdealPoint, PiOverFourFlipsWithCertaintyButNoEntanglement) {
  const auto p = ideal_point(kPi / 4);
  EXPECT_NEAR(p.p_down, 1.0, 1e-15);
  EXPECT_NEAR(p.eof, 0.0, 1e-12);
}

TEST(IdealPoint, ZeroProbabilityMeansZeroConcurrence) {
  for (double jt : {0.0, kPi / 2, kPi}) {
    const auto p = ideal_point(jt);
    EXPECT_LT(p.p_down, 1e-15);
    EXPECT_EQ(p.concurrence, 0.0);
    EXPECT_EQ(p.eof, 0.0);
  }
}

TEST(IdealPoint, AgreesWithMeasuredSimulation) {
  const auto initial = basis_state({U, D, D});
  for (double jt : uniform_grid(0.01, kPi / 2 - 0.01, 97)) {
    const auto m = measure_site(simulate_sequential(initial, jt, 2), 0, D);
    StateVector<double> impurities(4);
    for (int k = 0; k < 4; ++k) impurities(k) = m.post_state(4 + k);
    const auto p = ideal_point(jt);
    EXPECT_NEAR(p.p_down, m.probability, 1e-12);
    EXPECT_NEAR(p.concurrence, concurrence_pure(impurities), 1e-12);
  }
}

TEST(BestProbability, HighEntanglementTargets) {
  const auto e99 = best_probability_for_target(0.99, 0.0, kPi / 2, 1001);
  ASSERT_TRUE(e99.has_value());
  EXPECT_NEAR(e99->p_down, kBestPAtE099, 1e-9);
  EXPECT_GE(e99->eof, 0.99);

  const auto e84 = best_probability_for_target(0.84, 0.0, kPi / 2, 1001);
  ASSERT_TRUE(e84.has_value());
  EXPECT_NEAR(e84->p_down, kBestPAtE084, 1e-9);
  EXPECT_NEAR(e84->jt, kJtAtE084, 1e-9);
}

TEST(BestProbability, UnreachableTarget) {
  // eof < 0.5 on the whole interval [pi/4 - 0.05, pi/4].
  EXPECT_FALSE(best_probability_for_target(0.9, kPi / 4 - 0.05, kPi / 4, 11).has_value());
  EXPECT_THROW(best_probability_for_target(0.5, 1.0, 0.0, 11), std::invalid_argument);
}

TEST(SweepIdeal, Basics) {
  const std::vector<double> zero{0.0};
  const auto single = sweep_ideal(zero);
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single[0].jt, 0.0);
  EXPECT_EQ(single[0].p_down, 0.0);
  EXPECT_EQ(single[0].concurrence, 0.0);
  EXPECT_EQ(single[0].eof, 0.0);

  const std::vector<double> three{0.0, kPi / 8, kPi / 4};
  const auto pts = sweep_ideal(three);
  ASSERT_EQ(pts.size(), 3u);
  for (std::size_t k = 0; k < 3; ++k) {
    const auto ref = ideal_point(three[k]);
    EXPECT_EQ(pts[k].p_down, ref.p_down);
    EXPECT_EQ(pts[k].eof, ref.eof);
  }
  EXPECT_THROW(sweep_ideal(std::vector<double>{}), std::invalid_argument);
}

TEST(SweepIdeal, MaximumProbabilityIsAtQuarterPi) {
  const auto grid = uniform_grid(0.0, kPi / 2, 1001);
  const auto pts = sweep_ideal(grid);
  const auto best = std::max_element(pts.begin(), pts.end(), [](auto& a, auto& b) {
    return a.p_down < b.p_down;
  });
  EXPECT_NEAR(best->p_down, 1.0, 1e-15);
  EXPECT_NEAR(best->jt, kPi / 4, 1e-12);
  EXPECT_NEAR(best->eof, 0.0, 1e-12);
}

// ---------------------------------------------------------------------------
// Structural properties

TEST(IdealProperties, Periodicity) {
  for (double jt : uniform_grid(0.0, kPi / 2, 100)) {
    const auto a = ideal_point(jt);
    const auto b = ideal_point(jt + kPi / 2);
    EXPECT_NEAR(a.p_down, b.p_down, 1e-12);
    EXPECT_NEAR(a.concurrence, b.concurrence, 1e-12) << jt;
    EXPECT_NEAR(a.eof, b.eof, 1e-12);
  }
}

TEST(IdealProperties, ClosedFormIdentityInU) {
  for (double jt : uniform_grid(0.0, kPi / 2, 1001)) {
    const auto c = closed_form_coefficients(jt);
    const double u = std::abs(1.0 + std::exp(cd(0, 4 * jt))) / 2;
    const auto p = ideal_point(jt);
    EXPECT_NEAR(p.p_down, std::norm(c.beta) * (1 + u * u) / 4, 1e-12);
    if (p.p_down >= tol::kImpossibleOutcome) {
      EXPECT_NEAR(p.concurrence, 2 * u / (1 + u * u), 1e-12) << "jt = " << jt;
    }
    if (u >= 1.0 - 1e-9) EXPECT_LE(p.p_down, 1e-8);
  }
}

TEST(IdealProperties, SpinSectorConservation) {
  const auto initial = basis_state({U, D, D});
  for (double jt : uniform_grid(0.0, kPi, 61)) {
    const auto psi = simulate_sequential(initial, jt, 2);
    for (Eigen::Index i = 0; i < psi.size(); ++i) {
      const int downs = __builtin_popcount(static_cast<unsigned>(i));
      if (downs != 2) EXPECT_LT(std::abs(psi(i)), 1e-15) << "index " << i;
    }
  }
}

TEST(AnalyzeSequential, TwoImpuritiesMatchIdealPoint) {
  const auto initial = basis_state({U, D, D});
  for (double jt : uniform_grid(0.05, 1.5, 40)) {
    const auto report = analyze_sequential(initial, jt, 2);
    const auto p = ideal_point(jt);
    EXPECT_NEAR(report.down.probability, p.p_down, 1e-12);
    EXPECT_NEAR(report.up.probability + report.down.probability, 1.0, 1e-12);
    EXPECT_NEAR(report.down.pair_concurrence(0, 1), p.concurrence, 1e-9);
    EXPECT_NEAR(report.up.pair_concurrence(0, 1), 0.0, 1e-9);
  }
}

TEST(AnalyzeSequential, SingleImpuritySwap) {
  const auto report = analyze_sequential(basis_state({U, D}), kPi / 4, 1);
  EXPECT_NEAR(report.down.probability, 1.0, 1e-15);
  EXPECT_EQ(report.up.probability, 0.0);
  EXPECT_EQ(report.up.post_state.size(), 0);
  EXPECT_EQ(report.down.pair_concurrence.rows(), 1);
}

TEST(AnalyzeSequential, IdentityEvolutionLeavesNoEntanglement) {
  const auto initial = basis_state({U, D, D, D});
  const auto report = analyze_sequential(initial, 0.0, 3);
  EXPECT_LT(max_abs_diff(report.final_state, initial), 1e-15);
  EXPECT_EQ(report.up.probability, 1.0);
  EXPECT_EQ(report.down.probability, 0.0);
  EXPECT_LT(report.up.pair_concurrence.cwiseAbs().maxCoeff(), 1e-12);
}

TEST(AnalyzeSequential, LongerChainsConserveNormAndSz) {
  for (int n = 3; n <= 7; ++n) {
    std::vector<Spin> spins(n + 1, D);
    spins[0] = U;
    const auto report = analyze_sequential(basis_state<double>(spins), 0.31, n);
    EXPECT_NEAR(report.final_state.norm(), 1.0, 1e-12);
    for (Eigen::Index i = 0; i < report.final_state.size(); ++i) {
      if (__builtin_popcount(static_cast<unsigned>(i)) != n) {
        EXPECT_LT(std::abs(report.final_state(i)), 1e-14);
      }
    }
    const auto& c = report.down.pair_concurrence;
    EXPECT_LT((c - c.transpose()).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_GE(c.minCoeff(), 0.0);
    EXPECT_LE(c.maxCoeff(), 1.0);
    EXPECT_GT(c(0, 1), 0.0);
  }
}
