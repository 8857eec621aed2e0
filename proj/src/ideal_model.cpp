// Copyright 2026 The spinent Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinent/ideal_model.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "spinent/entanglement.hpp"
#include "spinent/grid.hpp"
#include "spinent/tolerances.hpp"

namespace spinent {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

void require_finite(double jt, const char* who) {
  if (!std::isfinite(jt)) throw std::invalid_argument(std::string(who) + ": jt is not finite");
}

}  // namespace

Operator<double> exchange_unitary(double jt) {
  require_finite(jt, "exchange_unitary");
  // S.sigma = 2 SWAP - I, so U = e^{-i jt} (a I + b SWAP).
  const std::complex<double> e4 = std::exp(4.0 * kI * jt);
  const std::complex<double> a = (1.0 + e4) / 2.0;
  const std::complex<double> b = (1.0 - e4) / 2.0;
  return std::exp(-kI * jt) * (a * identity<double>(4) + b * swap_gate<double>());
}

IdealCoefficients closed_form_coefficients(double jt) {
  require_finite(jt, "closed_form_coefficients");
  const std::complex<double> e4 = std::exp(4.0 * kI * jt);
  const std::complex<double> e8 = std::exp(8.0 * kI * jt);
  IdealCoefficients c;
  c.alpha = (1.0 + e4) * (1.0 + e4) / 2.0;
  c.beta = 1.0 - e4;
  c.gamma = (1.0 - e8) / 2.0;
  c.global_phase = std::exp(-2.0 * kI * jt) / 2.0;
  return c;
}

StateVector<double> closed_form_state(const IdealCoefficients& c) {
  StateVector<double> psi = StateVector<double>::Zero(8);
  psi(basis_index(std::array{Spin::Up, Spin::Down, Spin::Down})) = c.global_phase * c.alpha;
  psi(basis_index(std::array{Spin::Down, Spin::Up, Spin::Down})) = c.global_phase * c.beta;
  psi(basis_index(std::array{Spin::Down, Spin::Down, Spin::Up})) = c.global_phase * c.gamma;
  return psi;
}

StateVector<double> simulate_sequential(const StateVector<double>& initial, double jt,
                                        int n_impurities) {
  if (n_impurities < 1) throw std::invalid_argument("simulate_sequential: need an impurity");
  if (initial.size() != (Eigen::Index{1} << (n_impurities + 1))) {
    throw std::invalid_argument("simulate_sequential: initial state has " +
                                std::to_string(site_count(initial.size())) + " sites, expected " +
                                std::to_string(n_impurities + 1));
  }
  const Operator<double> u = exchange_unitary(jt);
  StateVector<double> psi = initial;
  for (int k = 1; k <= n_impurities; ++k) {
    const std::array<int, 2> sites{0, k};
    psi = apply_on_sites<double>(u, sites, psi);
  }
  return psi;
}

IdealPoint ideal_point(double jt) {
  const IdealCoefficients c = closed_form_coefficients(jt);
  const double flip_weight = std::norm(c.beta) + std::norm(c.gamma);
  IdealPoint p;
  p.jt = jt;
  p.p_down = std::min(1.0, flip_weight / 4.0);
  if (p.p_down >= tol::kImpossibleOutcome) {
    p.concurrence = clamp_concurrence(2.0 * std::abs(c.beta * c.gamma) / flip_weight);
  }
  p.eof = eof_from_concurrence(p.concurrence);
  return p;
}

std::vector<IdealPoint> sweep_ideal(std::span<const double> jt_grid) {
  if (jt_grid.empty()) throw std::invalid_argument("sweep_ideal: empty grid");
  std::vector<IdealPoint> out;
  out.reserve(jt_grid.size());
  for (double jt : jt_grid) out.push_back(ideal_point(jt));
  return out;
}

std::optional<IdealPoint> best_probability_for_target(double target_eof, double lo, double hi,
                                                      int n_points) {
  if (!(lo < hi)) throw std::invalid_argument("best_probability_for_target: need lo < hi");
  if (n_points < 2) throw std::invalid_argument("best_probability_for_target: need >= 2 points");
  const auto grid = uniform_grid(lo, hi, n_points);
  const auto points = sweep_ideal(grid);
  auto feasible = [&](const IdealPoint& p) { return p.eof >= target_eof; };

  std::optional<std::size_t> best;
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (feasible(points[k]) && (!best || points[k].p_down > points[*best].p_down)) best = k;
  }
  if (!best) return std::nullopt;

  IdealPoint result = points[*best];
  auto refine_towards = [&](std::size_t neighbour) {
    const IdealPoint& n = points[neighbour];
    if (feasible(n) || n.p_down <= result.p_down) return;
    double good = points[*best].jt;
    double bad = n.jt;
    for (int it = 0; it < 200 && std::abs(bad - good) > 1e-15; ++it) {
      const double mid = 0.5 * (good + bad);
      (feasible(ideal_point(mid)) ? good : bad) = mid;
    }
    const IdealPoint edge = ideal_point(good);
    if (edge.p_down > result.p_down) result = edge;
  };
  if (*best > 0) refine_towards(*best - 1);
  if (*best + 1 < points.size()) refine_towards(*best + 1);
  return result;
}

SequentialReport analyze_sequential(const StateVector<double>& initial, double jt,
                                    int n_impurities) {
  SequentialReport report;
  report.final_state = simulate_sequential(initial, jt, n_impurities);

  auto branch = [&](Spin outcome) {
    PostSelectedBranch b;
    b.electron = outcome;
    b.probability = outcome_probability(report.final_state, 0, outcome);
    b.pair_concurrence = Eigen::MatrixXd::Zero(n_impurities, n_impurities);
    if (b.probability < tol::kImpossibleOutcome) {
      b.probability = 0.0;
      return b;
    }
    b.post_state = measure_site(report.final_state, 0, outcome).post_state;
    for (int i = 1; i <= n_impurities; ++i) {
      for (int j = i + 1; j <= n_impurities; ++j) {
        const double c = concurrence_mixed(partial_trace(b.post_state, {i, j}));
        b.pair_concurrence(i - 1, j - 1) = b.pair_concurrence(j - 1, i - 1) = c;
      }
    }
    return b;
  };
  report.up = branch(Spin::Up);
  report.down = branch(Spin::Down);
  return report;
}

}  // namespace spinent
