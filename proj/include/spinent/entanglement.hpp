// Copyright 2026 The spinent Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file entanglement.hpp
 * @brief Two-qubit entanglement quantifiers, in ebits (log base 2).
 *
 * Concurrence of pure and mixed two-qubit states, binary entropy, and the
 * entanglement of formation E(C) = h((1 + sqrt(1 - C^2)) / 2).
 */

#pragma once

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

#include "spinent/quantum_core.hpp"
#include "spinent/tolerances.hpp"

namespace spinent {

/// h(x) = -x log2 x - (1-x) log2(1-x), with h(0) = h(1) = 0.
template <typename Scalar>
Scalar binary_entropy(Scalar x) {
  if (!(x >= -Scalar(tol::kAlgebraic) && x <= Scalar(1) + Scalar(tol::kAlgebraic))) {
    throw std::domain_error("binary_entropy: argument outside [0, 1]");
  }
  x = std::clamp(x, Scalar(0), Scalar(1));
  auto term = [](Scalar p) { return p > Scalar(0) ? -p * std::log2(p) : Scalar(0); };
  return term(x) + term(Scalar(1) - x);
}

/// Clamps round-off back into [0, 1]; anything further out is a bug upstream.
template <typename Scalar>
Scalar clamp_concurrence(Scalar raw) {
  const Scalar slack(tol::kConcurrenceClamp);
  if (!(raw >= -slack && raw <= Scalar(1) + slack)) {
    throw std::domain_error("concurrence " + std::to_string(double(raw)) + " outside [0, 1]");
  }
  return std::clamp(raw, Scalar(0), Scalar(1));
}

/// C = 2|a00 a11 - a01 a10| for a unit-norm two-qubit pure state.
template <typename Scalar>
Scalar concurrence_pure(const StateVector<Scalar>& amps) {
  if (amps.size() != 4) throw std::invalid_argument("concurrence_pure: expected 4 amplitudes");
  if (std::abs(amps.squaredNorm() - Scalar(1)) > Scalar(tol::kSpectral)) {
    throw std::invalid_argument("concurrence_pure: input is not normalized");
  }
  return clamp_concurrence(Scalar(2) * std::abs(amps(0) * amps(3) - amps(1) * amps(2)));
}

template <typename Scalar>
Scalar eof_from_concurrence(Scalar c) {
  c = clamp_concurrence(c);
  const Scalar s = std::sqrt(std::max(Scalar(0), Scalar(1) - c * c));
  return binary_entropy((Scalar(1) + s) / Scalar(2));
}

namespace detail {

template <typename Scalar>
void check_density_matrix(const DensityMatrix<Scalar>& rho, const char* who) {
  if (rho.rows() != rho.cols()) throw std::invalid_argument(std::string(who) + ": not square");
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > Scalar(tol::kAlgebraic)) {
    throw std::invalid_argument(std::string(who) + ": matrix is not Hermitian");
  }
  if (std::abs(rho.trace() - Complex<Scalar>(1)) > Scalar(tol::kAlgebraic)) {
    throw std::invalid_argument(std::string(who) + ": trace is not 1");
  }
}

}  // namespace detail

/**
 * Wootters concurrence C = max(0, l1 - l2 - l3 - l4) of a two-qubit density matrix.
 *
 * The l_i are the descending square roots of the eigenvalues of rho * rho~ with
 * rho~ = (Y x Y) rho* (Y x Y). They are taken as singular values rather than as
 * square roots of eigenvalues, so exact zeros stay at rounding level.
 */
template <typename Scalar>
Scalar concurrence_mixed(const DensityMatrix<Scalar>& rho) {
  detail::check_density_matrix(rho, "concurrence_mixed");
  if (rho.rows() != 4) throw std::invalid_argument("concurrence_mixed: expected a 4x4 matrix");

  Eigen::SelfAdjointEigenSolver<Operator<Scalar>> rho_eig(rho);
  const auto& w = rho_eig.eigenvalues();
  if (w.minCoeff() < -Scalar(tol::kSpectral)) {
    throw std::invalid_argument("concurrence_mixed: matrix is not positive semidefinite");
  }
  // rho = W W^dag with W = V sqrt(w); the sqrt-eigenvalues of rho (Y rho* Y) are the
  // singular values of W^T (Y x Y) W. Eigenvalues at rounding level are taken as zero.
  const Scalar cutoff = Scalar(16) * std::numeric_limits<Scalar>::epsilon() * w.maxCoeff();
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> weights = w;
  for (Eigen::Index k = 0; k < weights.size(); ++k) {
    weights(k) = weights(k) > cutoff ? std::sqrt(weights(k)) : Scalar(0);
  }
  const Operator<Scalar> factor = rho_eig.eigenvectors() * weights.asDiagonal();
  const Operator<Scalar> yy = kron(pauli_y<Scalar>(), pauli_y<Scalar>());
  const Operator<Scalar> tau = factor.transpose() * yy * factor;

  Eigen::JacobiSVD<Operator<Scalar>> svd(tau);
  std::array<Scalar, 4> l{};
  for (int k = 0; k < 4; ++k) l[k] = svd.singularValues()(k);
  std::sort(l.begin(), l.end(), std::greater<>());
  return clamp_concurrence(std::max(Scalar(0), l[0] - l[1] - l[2] - l[3]));
}

}  // namespace spinent
