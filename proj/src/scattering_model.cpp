// Copyright 2026 The spinent Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinent/scattering_model.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "spinent/entanglement.hpp"
#include "spinent/grid.hpp"
#include "spinent/tolerances.hpp"

namespace spinent {

namespace {

constexpr int kScanPoints = 2001;
constexpr double kRootResidual = 1e-12;

double flip_asymmetry(double j_rho) {
  const auto amps = normalized_amplitudes(j_rho);
  return std::abs(amps.b) - std::abs(amps.c);
}

double flip_weight(double j_rho) {
  const auto amps = normalized_amplitudes(j_rho);
  return std::norm(amps.b) + std::norm(amps.c);
}

}  // namespace

SeriesParams series_params(double j_rho) {
  if (!std::isfinite(j_rho)) throw std::invalid_argument("series_params: j_rho is not finite");
  if (j_rho < 0.0) {
    throw std::invalid_argument("series_params: negative coupling " + std::to_string(j_rho));
  }
  SeriesParams p;
  p.lambda = {0.0, std::numbers::pi * j_rho / 2.0};
  p.t_amp = 1.0 - p.lambda;
  return p;
}

ScatteringAmplitudes raw_series_order3(double j_rho) {
  const auto [l, t] = series_params(j_rho);
  const auto l2 = l * l;
  const auto l3 = l2 * l;
  const auto l4 = l3 * l;
  const auto l5 = l4 * l;
  const auto l6 = l5 * l;
  const auto t2 = t * t;

  ScatteringAmplitudes amps;
  amps.a = t2 + t2 * l2 - 8.0 * t * l3 + 16.0 * l6 - 7.0 * t2 * l4;
  amps.b = -2.0 * l * t + 2.0 * t * l3 - 2.0 * t2 * l2 + 6.0 * t * l5 + 8.0 * t2 * l4;
  amps.c = -2.0 * l * t + 8.0 * l4 - 2.0 * t * l3 + 2.0 * t2 * l2 + 6.0 * t * l5;
  amps.normalized = false;
  return amps;
}

ScatteringAmplitudes normalized_amplitudes(double j_rho) {
  ScatteringAmplitudes amps = raw_series_order3(j_rho);
  const double norm = std::sqrt(std::norm(amps.a) + std::norm(amps.b) + std::norm(amps.c));
  if (!(norm > tol::kImpossibleOutcome)) {
    throw std::domain_error("normalized_amplitudes: series vanishes at j_rho = " +
                            std::to_string(j_rho));
  }
  amps.a /= norm;
  amps.b /= norm;
  amps.c /= norm;
  amps.normalized = true;
  return amps;
}

StateVector<double> transmitted_state(const ScatteringAmplitudes& amps) {
  StateVector<double> psi = StateVector<double>::Zero(8);
  psi(basis_index(std::array{Spin::Up, Spin::Down, Spin::Down})) = amps.a;
  psi(basis_index(std::array{Spin::Down, Spin::Up, Spin::Down})) = amps.b;
  psi(basis_index(std::array{Spin::Down, Spin::Down, Spin::Up})) = amps.c;
  return psi;
}

ScatterPoint scatter_point(double j_rho) {
  const auto amps = normalized_amplitudes(j_rho);
  const double weight = std::norm(amps.b) + std::norm(amps.c);
  ScatterPoint p;
  p.j_rho = j_rho;
  p.p_down = std::min(1.0, weight);
  // Spin-up transmission leaves |dd>, which carries no entanglement.
  if (p.p_down >= tol::kImpossibleOutcome) {
    p.concurrence = clamp_concurrence(2.0 * std::abs(amps.b * amps.c) / weight);
  }
  p.eof = eof_from_concurrence(p.concurrence);
  return p;
}

std::vector<ScatterPoint> sweep_scatter(std::span<const double> j_grid) {
  if (j_grid.empty()) throw std::invalid_argument("sweep_scatter: empty grid");
  std::vector<ScatterPoint> out;
  out.reserve(j_grid.size());
  for (double j : j_grid) out.push_back(scatter_point(j));
  return out;
}

std::vector<double> find_max_entanglement(double lo, double hi) {
  if (!(lo >= 0.0 && lo < hi && hi <= kSeriesValidityMax)) {
    throw std::invalid_argument("find_max_entanglement: need 0 <= lo < hi <= 2");
  }
  const auto grid = uniform_grid(lo, hi, kScanPoints);
  std::vector<double> d(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) d[k] = flip_asymmetry(grid[k]);

  std::vector<double> roots;
  auto accept = [&](double x) {
    if (flip_weight(x) >= tol::kImpossibleOutcome) roots.push_back(x);
  };
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (d[k] == 0.0) {
      accept(grid[k]);
      continue;
    }
    if (k + 1 == grid.size() || d[k + 1] == 0.0 || (d[k] > 0.0) == (d[k + 1] > 0.0)) continue;

    double a = grid[k];
    double b = grid[k + 1];
    const bool a_positive = d[k] > 0.0;
    double mid = 0.5 * (a + b);
    for (int it = 0; it < 200; ++it) {
      mid = 0.5 * (a + b);
      if (mid <= a || mid >= b) break;
      const double dm = flip_asymmetry(mid);
      if (dm == 0.0) break;
      ((dm > 0.0) == a_positive ? a : b) = mid;
    }
    if (std::abs(flip_asymmetry(mid)) > kRootResidual) {
      throw std::runtime_error("find_max_entanglement: bisection did not converge near " +
                               std::to_string(mid));
    }
    accept(mid);
  }
  return roots;
}

}  // namespace spinent
