// Copyright 2026 The spinent Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinent/transfer_matrix.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace spinent {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

// (A, B) of psi = A e^{ikx} + B e^{-ikx}, stacked; maps left-side to right-side amplitudes.
Eigen::MatrixXcd delta_transfer(const Eigen::MatrixXd& m, double g) {
  const Eigen::Index n = m.rows();
  const Eigen::MatrixXcd igm = kI * g * m.cast<std::complex<double>>();
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
  Eigen::MatrixXcd t(2 * n, 2 * n);
  t << id - igm, -igm,
       igm, id + igm;
  return t;
}

Eigen::MatrixXcd free_transfer(Eigen::Index n, double kd) {
  Eigen::VectorXcd phases(2 * n);
  phases.head(n).setConstant(std::exp(kI * kd));
  phases.tail(n).setConstant(std::exp(-kI * kd));
  return phases.asDiagonal();
}

}  // namespace

Eigen::MatrixXcd ChainScattering::s_matrix() const {
  const Eigen::Index n = channels();
  Eigen::MatrixXcd s(2 * n, 2 * n);
  s << reflection, transmission_from_right,
       transmission, reflection_from_right;
  return s;
}

Eigen::MatrixXd exchange_channel_matrix(int n_impurities, int impurity) {
  if (n_impurities < 1 || impurity < 1 || impurity > n_impurities) {
    throw std::invalid_argument("exchange_channel_matrix: impurity index out of range");
  }
  // |up>_e|down>_k -> -|up,down> + 2|down,up>; every other pair is a triplet (+1).
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n_impurities + 1, n_impurities + 1);
  m(0, 0) = -1.0;
  m(impurity, impurity) = -1.0;
  m(0, impurity) = m(impurity, 0) = 2.0;
  return m;
}

ChainScattering chain_transfer_matrix(double g, double kd, int n_impurities) {
  if (!std::isfinite(g) || !std::isfinite(kd)) {
    throw std::invalid_argument("chain_transfer_matrix: non-finite parameter");
  }
  if (n_impurities < 1) throw std::invalid_argument("chain_transfer_matrix: need an impurity");
  const Eigen::Index n = n_impurities + 1;

  Eigen::MatrixXcd total = delta_transfer(exchange_channel_matrix(n_impurities, 1), g);
  for (int k = 2; k <= n_impurities; ++k) {
    total = (delta_transfer(exchange_channel_matrix(n_impurities, k), g) *
             free_transfer(n, kd) * total).eval();
  }

  const Eigen::MatrixXcd t11 = total.topLeftCorner(n, n);
  const Eigen::MatrixXcd t12 = total.topRightCorner(n, n);
  const Eigen::MatrixXcd t21 = total.bottomLeftCorner(n, n);
  const Eigen::MatrixXcd t22 = total.bottomRightCorner(n, n);
  const Eigen::PartialPivLU<Eigen::MatrixXcd> t22_lu(t22);

  ChainScattering out;
  // Left incidence: (t, 0) = T (e_j, r).
  out.reflection = -t22_lu.solve(t21);
  out.transmission = t11 + t12 * out.reflection;
  // Right incidence: (r', e_j) = T (0, t').
  out.transmission_from_right = t22_lu.inverse();
  out.reflection_from_right = t12 * out.transmission_from_right;
  return out;
}

ChainScattering exact_transfer_matrix(double g, double kd) {
  return chain_transfer_matrix(g, kd, 2);
}

}  // namespace spinent
