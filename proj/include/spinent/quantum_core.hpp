// Copyright 2026 The spinent Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file quantum_core.hpp
 * @brief Dense state vectors and operators over a register of spin-1/2 sites.
 *
 * Basis convention, used everywhere in the library:
 *   - site 0 is the electron spin, sites 1..N are the impurities in spatial order;
 *   - a site in |up> contributes bit 0, |down> contributes bit 1;
 *   - basis index = sum_i b_i * 2^(n-1-i), so site 0 is the most significant bit.
 *
 * An operator acting on an ordered site list uses the same convention locally:
 * the first listed site is the most significant bit of the operator's index.
 */

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "spinent/tolerances.hpp"

namespace spinent {

template <typename Scalar>
using Complex = std::complex<Scalar>;

template <typename Scalar>
using StateVector = Eigen::Matrix<Complex<Scalar>, Eigen::Dynamic, 1>;

template <typename Scalar>
using Operator = Eigen::Matrix<Complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;

// Hermitian, unit trace, PSD. Same storage as Operator; the invariants are
// checked by the functions that consume it.
template <typename Scalar>
using DensityMatrix = Operator<Scalar>;

enum class Spin : std::uint8_t { Up = 0, Down = 1 };

/// Thrown by measure_site when the requested branch has (numerically) zero weight.
class ImpossibleOutcome : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Number of spin-1/2 sites for a space of dimension `dim`; throws unless dim is a power of two.
inline int site_count(Eigen::Index dim) {
  if (dim < 2 || (dim & (dim - 1)) != 0) {
    throw std::invalid_argument("dimension " + std::to_string(dim) + " is not a power of two >= 2");
  }
  int n = 0;
  while ((Eigen::Index{1} << n) < dim) ++n;
  return n;
}

inline std::size_t basis_index(std::span<const Spin> spins) {
  std::size_t index = 0;
  for (Spin s : spins) index = (index << 1) | static_cast<std::size_t>(s);
  return index;
}

template <typename Scalar = double>
StateVector<Scalar> basis_state(std::span<const Spin> spins) {
  if (spins.empty()) throw std::invalid_argument("basis_state: at least one site required");
  StateVector<Scalar> psi = StateVector<Scalar>::Zero(Eigen::Index{1} << spins.size());
  psi(static_cast<Eigen::Index>(basis_index(spins))) = Scalar(1);
  return psi;
}

template <typename Scalar = double>
StateVector<Scalar> basis_state(std::initializer_list<Spin> spins) {
  return basis_state<Scalar>(std::span<const Spin>(spins.begin(), spins.size()));
}

template <typename Scalar = double>
Operator<Scalar> identity(Eigen::Index dim) {
  return Operator<Scalar>::Identity(dim, dim);
}

template <typename Scalar = double>
Operator<Scalar> pauli_x() {
  Operator<Scalar> m(2, 2);
  m << Scalar(0), Scalar(1), Scalar(1), Scalar(0);
  return m;
}

template <typename Scalar = double>
Operator<Scalar> pauli_y() {
  const Complex<Scalar> i(0, 1);
  Operator<Scalar> m(2, 2);
  m << Scalar(0), -i, i, Scalar(0);
  return m;
}

template <typename Scalar = double>
Operator<Scalar> pauli_z() {
  Operator<Scalar> m(2, 2);
  m << Scalar(1), Scalar(0), Scalar(0), Scalar(-1);
  return m;
}

template <typename Scalar = double>
Operator<Scalar> swap_gate() {
  Operator<Scalar> m = Operator<Scalar>::Zero(4, 4);
  m(0, 0) = m(3, 3) = Scalar(1);
  m(1, 2) = m(2, 1) = Scalar(1);
  return m;
}

/// (|up,down> + |down,up>)/sqrt(2)
template <typename Scalar = double>
StateVector<Scalar> bell_psi_plus() {
  StateVector<Scalar> psi = StateVector<Scalar>::Zero(4);
  psi(1) = psi(2) = Scalar(1) / std::sqrt(Scalar(2));
  return psi;
}

/// (|up,down> - |down,up>)/sqrt(2)
template <typename Scalar = double>
StateVector<Scalar> bell_psi_minus() {
  StateVector<Scalar> psi = StateVector<Scalar>::Zero(4);
  psi(1) = Scalar(1) / std::sqrt(Scalar(2));
  psi(2) = -psi(1);
  return psi;
}

template <typename Scalar>
Operator<Scalar> kron(const Operator<Scalar>& a, const Operator<Scalar>& b) {
  Operator<Scalar> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

template <typename Scalar>
StateVector<Scalar> kron(const StateVector<Scalar>& a, const StateVector<Scalar>& b) {
  StateVector<Scalar> out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

template <typename Scalar>
StateVector<Scalar> normalized(const StateVector<Scalar>& s) {
  const Scalar norm = s.norm();
  if (!(norm > Scalar(0)) || !std::isfinite(norm)) {
    throw std::invalid_argument("normalized: state has zero or non-finite norm");
  }
  return s / norm;
}

namespace detail {

inline void check_sites(std::span<const int> sites, int n_sites, const char* who) {
  for (std::size_t k = 0; k < sites.size(); ++k) {
    if (sites[k] < 0 || sites[k] >= n_sites) {
      throw std::invalid_argument(std::string(who) + ": site " + std::to_string(sites[k]) +
                                  " out of range for " + std::to_string(n_sites) + " sites");
    }
    for (std::size_t m = 0; m < k; ++m) {
      if (sites[m] == sites[k]) {
        throw std::invalid_argument(std::string(who) + ": repeated site " +
                                    std::to_string(sites[k]));
      }
    }
  }
}

inline std::size_t site_bit(int site, int n_sites) {
  return std::size_t{1} << (n_sites - 1 - site);
}

// Full-register offset of each local index of an operator on `sites`.
inline std::vector<std::size_t> local_offsets(std::span<const int> sites, int n_sites) {
  const std::size_t k = sites.size();
  std::vector<std::size_t> offsets(std::size_t{1} << k, 0);
  for (std::size_t local = 0; local < offsets.size(); ++local) {
    for (std::size_t j = 0; j < k; ++j) {
      if (local & (std::size_t{1} << (k - 1 - j))) offsets[local] |= site_bit(sites[j], n_sites);
    }
  }
  return offsets;
}

inline std::vector<int> complement(std::span<const int> keep, int n_sites) {
  std::vector<int> rest;
  for (int s = 0; s < n_sites; ++s) {
    if (std::find(keep.begin(), keep.end(), s) == keep.end()) rest.push_back(s);
  }
  return rest;
}

}  // namespace detail

/**
 * Applies `u` to the ordered `sites` of `s`, identity elsewhere.
 * `u` must have dimension 2^sites.size(); sites must be distinct and in range.
 */
template <typename Scalar>
StateVector<Scalar> apply_on_sites(const Operator<Scalar>& u, std::span<const int> sites,
                                   const StateVector<Scalar>& s) {
  const int n = site_count(s.size());
  detail::check_sites(sites, n, "apply_on_sites");
  if (sites.empty() || u.rows() != u.cols() ||
      u.rows() != (Eigen::Index{1} << sites.size())) {
    throw std::invalid_argument("apply_on_sites: operator dimension does not match site list");
  }
  const auto offsets = detail::local_offsets(sites, n);
  std::size_t mask = 0;
  for (int site : sites) mask |= detail::site_bit(site, n);

  StateVector<Scalar> out(s.size());
  StateVector<Scalar> local(u.rows());
  for (std::size_t base = 0; base < static_cast<std::size_t>(s.size()); ++base) {
    if (base & mask) continue;
    for (std::size_t l = 0; l < offsets.size(); ++l) local(l) = s(base | offsets[l]);
    local = (u * local).eval();
    for (std::size_t l = 0; l < offsets.size(); ++l) out(base | offsets[l]) = local(l);
  }
  return out;
}

template <typename Scalar>
StateVector<Scalar> apply_on_sites(const Operator<Scalar>& u, std::initializer_list<int> sites,
                                   const StateVector<Scalar>& s) {
  return apply_on_sites(u, std::span<const int>(sites.begin(), sites.size()), s);
}

template <typename Scalar>
struct Measurement {
  Scalar probability;
  StateVector<Scalar> post_state;  // same register; the measured site is collapsed, not removed
};

/// Projective z-measurement of one site, conditioned on `outcome`.
template <typename Scalar>
Measurement<Scalar> measure_site(const StateVector<Scalar>& s, int site, Spin outcome) {
  const int n = site_count(s.size());
  if (site < 0 || site >= n) throw std::invalid_argument("measure_site: site out of range");
  const std::size_t bit = detail::site_bit(site, n);
  const bool want_down = outcome == Spin::Down;

  StateVector<Scalar> projected = s;
  for (std::size_t i = 0; i < static_cast<std::size_t>(s.size()); ++i) {
    if (((i & bit) != 0) != want_down) projected(i) = Scalar(0);
  }
  const Scalar p = projected.squaredNorm();
  if (p < Scalar(tol::kImpossibleOutcome)) {
    throw ImpossibleOutcome("measure_site: outcome has probability " + std::to_string(double(p)));
  }
  return {p, projected / std::sqrt(p)};
}

/// Outcome probability only; never throws for a zero-weight branch.
template <typename Scalar>
Scalar outcome_probability(const StateVector<Scalar>& s, int site, Spin outcome) {
  const int n = site_count(s.size());
  if (site < 0 || site >= n) throw std::invalid_argument("outcome_probability: site out of range");
  const std::size_t bit = detail::site_bit(site, n);
  const bool want_down = outcome == Spin::Down;
  Scalar p(0);
  for (std::size_t i = 0; i < static_cast<std::size_t>(s.size()); ++i) {
    if (((i & bit) != 0) == want_down) p += std::norm(s(i));
  }
  return p;
}

/// Reduced density matrix on `keep` (in the listed order) of a pure state.
template <typename Scalar>
DensityMatrix<Scalar> partial_trace(const StateVector<Scalar>& s, std::span<const int> keep) {
  const int n = site_count(s.size());
  if (keep.empty()) throw std::invalid_argument("partial_trace: keep list is empty");
  detail::check_sites(keep, n, "partial_trace");
  const auto rest = detail::complement(keep, n);
  const auto keep_off = detail::local_offsets(keep, n);
  const auto rest_off = detail::local_offsets(rest, n);

  // Rows: kept configuration; columns: traced-out configuration.
  Operator<Scalar> psi(keep_off.size(), rest_off.size());
  for (std::size_t i = 0; i < keep_off.size(); ++i) {
    for (std::size_t e = 0; e < rest_off.size(); ++e) psi(i, e) = s(keep_off[i] | rest_off[e]);
  }
  return psi * psi.adjoint();
}

template <typename Scalar>
DensityMatrix<Scalar> partial_trace(const DensityMatrix<Scalar>& rho, std::span<const int> keep) {
  if (rho.rows() != rho.cols()) throw std::invalid_argument("partial_trace: matrix is not square");
  const int n = site_count(rho.rows());
  if (keep.empty()) throw std::invalid_argument("partial_trace: keep list is empty");
  detail::check_sites(keep, n, "partial_trace");
  const auto rest = detail::complement(keep, n);
  const auto keep_off = detail::local_offsets(keep, n);
  const auto rest_off = detail::local_offsets(rest, n);

  DensityMatrix<Scalar> out = DensityMatrix<Scalar>::Zero(keep_off.size(), keep_off.size());
  for (std::size_t i = 0; i < keep_off.size(); ++i) {
    for (std::size_t j = 0; j < keep_off.size(); ++j) {
      for (std::size_t e : rest_off) out(i, j) += rho(keep_off[i] | e, keep_off[j] | e);
    }
  }
  return out;
}

template <typename Scalar>
DensityMatrix<Scalar> partial_trace(const StateVector<Scalar>& s, std::initializer_list<int> keep) {
  return partial_trace(s, std::span<const int>(keep.begin(), keep.size()));
}

template <typename Scalar>
DensityMatrix<Scalar> partial_trace(const DensityMatrix<Scalar>& rho,
                                    std::initializer_list<int> keep) {
  return partial_trace(rho, std::span<const int>(keep.begin(), keep.size()));
}

template <typename Scalar>
DensityMatrix<Scalar> outer(const StateVector<Scalar>& s) {
  return s * s.adjoint();
}

}  // namespace spinent
