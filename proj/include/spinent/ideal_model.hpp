// Copyright 2026 The spinent Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file ideal_model.hpp
 * @brief Electron spin interacting in turn with each impurity through the same
 *        exchange unitary U(jt) = exp(-i jt S.sigma), Pauli convention.
 *
 * With the initial state |up>_e |down...down>, the two-impurity final state is
 *
 *   e^{-2i jt}/2 * (alpha |u,dd> + beta |d,ud> + gamma |d,du>)
 *
 * and measuring the electron down leaves the impurities in beta|ud> + gamma|du>.
 * All quantities are periodic in jt with period pi/2.
 */

#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "spinent/quantum_core.hpp"

namespace spinent {

struct IdealCoefficients {
  std::complex<double> alpha;
  std::complex<double> beta;
  std::complex<double> gamma;
  std::complex<double> global_phase;  // e^{-2i jt} / 2
};

struct IdealPoint {
  double jt = 0.0;
  double p_down = 0.0;
  double concurrence = 0.0;
  double eof = 0.0;
};

/// 4x4 unitary on (electron, impurity): e^{3i jt} on the singlet, e^{-i jt} on the triplet.
Operator<double> exchange_unitary(double jt);

IdealCoefficients closed_form_coefficients(double jt);

/// The three-site state assembled from the closed-form coefficients.
StateVector<double> closed_form_state(const IdealCoefficients& c);

/**
 * Applies exchange_unitary(jt) on sites (0, k) for k = 1..n_impurities, in order.
 * `initial` must have n_impurities + 1 sites.
 */
StateVector<double> simulate_sequential(const StateVector<double>& initial, double jt,
                                        int n_impurities);

/// Spin-down probability and conditional entanglement; concurrence is 0 when p_down is 0.
IdealPoint ideal_point(double jt);

std::vector<IdealPoint> sweep_ideal(std::span<const double> jt_grid);

/**
 * Largest p_down over [lo, hi] subject to eof >= target_eof.
 *
 * Scans an n_points uniform grid, then bisects on the eof = target boundary next
 * to the best feasible grid point. Returns nullopt when no grid point is feasible.
 */
std::optional<IdealPoint> best_probability_for_target(double target_eof, double lo, double hi,
                                                      int n_points);

// ---------------------------------------------------------------------------
// N-impurity sequential scattering

struct PostSelectedBranch {
  Spin electron = Spin::Down;
  double probability = 0.0;
  // Empty when the branch is impossible.
  StateVector<double> post_state;
  // Symmetric n_impurities x n_impurities; entry (i, j) is the Wootters concurrence
  // of impurities i+1 and j+1. Diagonal is zero.
  Eigen::MatrixXd pair_concurrence;
};

struct SequentialReport {
  StateVector<double> final_state;
  PostSelectedBranch up;
  PostSelectedBranch down;
};

SequentialReport analyze_sequential(const StateVector<double>& initial, double jt,
                                    int n_impurities);

}  // namespace spinent
