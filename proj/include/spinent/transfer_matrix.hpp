// Copyright 2026 The spinent Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file transfer_matrix.hpp
 * @brief Exact 1D scattering of an electron off a chain of exchange delta scatterers.
 *
 * Each impurity at x_i contributes g (S_i . sigma) delta(x - x_i), scaled so the
 * derivative jump is psi'(x_i+) - psi'(x_i-) = 2 k g (S_i . sigma) psi(x_i). A lone
 * scalar delta of this strength has t = 1/(1 + i g). Neighbouring impurities are
 * separated by the free-propagation phase kd.
 *
 * Only the S_z sector reachable from |up>_e |down...down> is kept. Channel 0 is
 * |up>_e with all impurities down; channel k (k = 1..n) is |down>_e with impurity
 * k flipped up. Amplitudes are referenced to the first impurity on the left and
 * the last impurity on the right.
 */

#pragma once

#include <Eigen/Dense>

namespace spinent {

struct ChainScattering {
  // Column j holds the outgoing amplitudes for unit incidence in channel j.
  Eigen::MatrixXcd transmission;             // incident from the left
  Eigen::MatrixXcd reflection;               // incident from the left
  Eigen::MatrixXcd transmission_from_right;  // incident from the right
  Eigen::MatrixXcd reflection_from_right;    // incident from the right

  Eigen::Index channels() const { return transmission.rows(); }

  /// [[r, t'], [t, r']]: maps (left-incoming, right-incoming) to (left-outgoing, right-outgoing).
  Eigen::MatrixXcd s_matrix() const;
};

/// S_k . sigma restricted to the single-flip channel basis of an n-impurity chain.
Eigen::MatrixXd exchange_channel_matrix(int n_impurities, int impurity);

ChainScattering chain_transfer_matrix(double g, double kd, int n_impurities);

/// Two-impurity chain.
ChainScattering exact_transfer_matrix(double g, double kd);

}  // namespace spinent
