// Copyright 2026 The spinent Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file scattering_model.hpp
 * @brief Transmitted channel of an electron multiply scattered by two impurities.
 *
 * The incoming state is |k_F, up>_e |down, down>. The transmitted component is
 *
 *   A |up>_e |dd> + B |down>_e |ud> + C |down>_e |du>
 *
 * with A, B, C given by the multiple-scattering series truncated after three
 * iterations (sixth order in lambda = i pi J rho(E_F) / 2, t = 1 - lambda).
 * The series is meant for j_rho in [0, 2].
 */

#pragma once

#include <complex>
#include <span>
#include <vector>

#include "spinent/quantum_core.hpp"

namespace spinent {

inline constexpr double kSeriesValidityMax = 2.0;

struct SeriesParams {
  std::complex<double> lambda;
  std::complex<double> t_amp;
};

struct ScatteringAmplitudes {
  std::complex<double> a;  // |up>_e   |down, down>
  std::complex<double> b;  // |down>_e |up, down>
  std::complex<double> c;  // |down>_e |down, up>
  bool normalized = false;
};

struct ScatterPoint {
  double j_rho = 0.0;
  double p_down = 0.0;  // |b|^2 + |c|^2 of the normalized triple
  double concurrence = 0.0;
  double eof = 0.0;
};

SeriesParams series_params(double j_rho);

/// The three order-3 polynomials, without normalization.
ScatteringAmplitudes raw_series_order3(double j_rho);

/// raw_series_order3 divided by its Euclidean norm.
ScatteringAmplitudes normalized_amplitudes(double j_rho);

/// Three-site state (electron, impurity 1, impurity 2) holding the triple.
StateVector<double> transmitted_state(const ScatteringAmplitudes& amps);

ScatterPoint scatter_point(double j_rho);

std::vector<ScatterPoint> sweep_scatter(std::span<const double> j_grid);

/**
 * Couplings in [lo, hi] where |B| = |C|, i.e. the spin-down conditional state is
 * maximally entangled. Sign changes of |B| - |C| are bracketed on a 2001-point
 * grid and refined by bisection. Points where B and C both vanish are skipped.
 * Returns an ascending list, empty when there is no sign change.
 */
std::vector<double> find_max_entanglement(double lo, double hi);

}  // namespace spinent
