// Copyright 2026 The spinent Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinent/transfer_matrix.hpp"

#include <gtest/gtest.h>

#include <numbers>
#include <random>

using namespace spinent;
using cd = std::complex<double>;

namespace {

double unitarity_defect(const Eigen::MatrixXcd& s) {
  return (s.adjoint() * s - Eigen::MatrixXcd::Identity(s.rows(), s.cols())).cwiseAbs().maxCoeff();
}

// Conditional concurrence of the transmitted spin-down part for |up>_e|dd> incidence.
double transmitted_flip_concurrence(double g, double kd) {
  const auto t = exact_transfer_matrix(g, kd).transmission;
  const double b = std::abs(t(1, 0)), c = std::abs(t(2, 0));
  return 2 * b * c / (b * b + c * c);
}

}  // namespace

TEST(TransferMatrix, FreePropagation) {
  // Only the phase picked up between the two sites remains.
  const auto s = exact_transfer_matrix(0.0, 0.7);
  const Eigen::MatrixXcd expected = std::exp(cd(0, 0.7)) * Eigen::MatrixXcd::Identity(3, 3);
  EXPECT_LT((s.transmission - expected).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LT(s.reflection.cwiseAbs().maxCoeff(), 1e-15);
}

TEST(TransferMatrix, ChannelMatrix) {
  Eigen::MatrixXd expected(3, 3);
  expected << -1, 0, 2,
               0, 1, 0,
               2, 0, -1;
  EXPECT_EQ(exchange_channel_matrix(2, 2), expected);
  EXPECT_THROW(exchange_channel_matrix(2, 0), std::invalid_argument);
  EXPECT_THROW(exchange_channel_matrix(2, 3), std::invalid_argument);
}

TEST(TransferMatrix, SingleImpurityMatchesSpectralSolution) {
  // One delta: r = -i g M (1 + i g M)^{-1}; M has eigenvalue +1 on the triplet
  // (|ud> + |du>)/sqrt2 and -3 on the singlet.
  for (double g : {0.05, 0.4, 1.7, -0.9}) {
    const auto s = chain_transfer_matrix(g, 0.0, 1);
    const cd i(0, 1);
    const cd trip = -i * g / (1.0 + i * g);
    const cd sing = 3.0 * i * g / (1.0 - 3.0 * i * g);
    EXPECT_LT(std::abs(s.reflection(0, 0) - (trip + sing) / 2.0), 1e-14) << g;
    EXPECT_LT(std::abs(s.reflection(1, 0) - (trip - sing) / 2.0), 1e-14) << g;
    EXPECT_LT(std::abs(s.transmission(1, 0) - s.reflection(1, 0)), 1e-14) << g;
  }
}

TEST(TransferMatrix, FirstOrderFlipRatio) {
  const double g = 1e-4;
  const auto s = chain_transfer_matrix(g, 0.0, 1);
  const double ratio = std::abs(s.reflection(1, 0) / s.reflection(0, 0));
  EXPECT_NEAR(ratio, 2.0, 1e-3);
  const double t_ratio = std::abs(s.transmission(1, 0) / (s.transmission(0, 0) - 1.0));
  EXPECT_NEAR(t_ratio, 2.0, 1e-3);
}

TEST(TransferMatrix, UnitarityOnRandomParameters) {
  std::mt19937_64 rng(31337);
  std::uniform_real_distribution<double> g_dist(-3.0, 3.0);
  std::uniform_real_distribution<double> kd_dist(0.0, 2 * std::numbers::pi);
  for (int k = 0; k < 100; ++k) {
    const double g = g_dist(rng), kd = kd_dist(rng);
    const auto s = exact_transfer_matrix(g, kd);
    EXPECT_LT(unitarity_defect(s.s_matrix()), 1e-10) << "g = " << g << ", kd = " << kd;
    for (Eigen::Index j = 0; j < s.channels(); ++j) {
      const double flux = s.transmission.col(j).squaredNorm() + s.reflection.col(j).squaredNorm();
      EXPECT_NEAR(flux, 1.0, 1e-10);
    }
  }
}

TEST(TransferMatrix, LongerChainsStayUnitary) {
  for (int n = 1; n <= 6; ++n) {
    const auto s = chain_transfer_matrix(0.8, 1.3, n);
    EXPECT_EQ(s.channels(), n + 1);
    EXPECT_LT(unitarity_defect(s.s_matrix()), 1e-10) << n;
  }
  EXPECT_THROW(chain_transfer_matrix(0.5, 0.5, 0), std::invalid_argument);
  EXPECT_THROW(chain_transfer_matrix(std::nan(""), 0.5, 2), std::invalid_argument);
}

TEST(TransferMatrix, FlipChannelsSymmetricAtWeakCoupling) {
  for (double g : {1e-2, 1e-3}) {
    const auto t = exact_transfer_matrix(g, 1.0).transmission;
    EXPECT_NEAR(std::abs(t(1, 0)), 2 * g, 10 * g * g);
    EXPECT_NEAR(std::abs(t(1, 0)) - std::abs(t(2, 0)), 0.0, 10 * g * g);
  }
}

TEST(TransferMatrix, HasAMaximallyEntanglingCoupling) {
  // |t_10| - |t_20| changes sign between these couplings at kd = 1.
  double lo = 0.1, hi = 0.4;
  auto asym = [](double g) {
    const auto t = exact_transfer_matrix(g, 1.0).transmission;
    return std::abs(t(1, 0)) - std::abs(t(2, 0));
  };
  ASSERT_LT(asym(lo) * asym(hi), 0.0);
  for (int it = 0; it < 100; ++it) {
    const double mid = 0.5 * (lo + hi);
    ((asym(mid) > 0) == (asym(lo) > 0) ? lo : hi) = mid;
  }
  EXPECT_GT(transmitted_flip_concurrence(lo, 1.0), 1.0 - 1e-9);
}
