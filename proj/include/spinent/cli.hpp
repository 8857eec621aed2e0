// Copyright 2026 The spinent Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file cli.hpp
 * @brief Command implementations behind the `spinent` executable.
 *
 * Each command writes its report to `out`, diagnostics to `err`, and returns the
 * process exit code: 0 success (including "none found"), 1 usage error, 2 I/O error.
 */

#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "spinent/quantum_core.hpp"

namespace spinent::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitIo = 2;

inline constexpr int kDefaultPoints = 1001;
inline constexpr int kMaxImpurities = 12;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Mode { Ideal, Scatter };

Mode parse_mode(std::string_view name);
std::string_view mode_name(Mode mode);

struct SweepConfig {
  Mode mode = Mode::Ideal;
  double x_min = 0.0;
  double x_max = 0.0;
  int n_points = kDefaultPoints;
  std::string output_path;  // empty or "-" writes to the command's `out` stream
};

/// Ideal: [0, pi/2]; scatter: [0, 2]; 1001 points.
SweepConfig default_sweep_config(Mode mode);

/// Throws UsageError unless x_min < x_max (finite), n_points >= 2 and, in scatter mode, x_min >= 0.
void validate(const SweepConfig& config);

/// 12 significant digits, no trailing zeros, "0" for either signed zero.
std::string format_number(double value);

/// The sweep table. Header `x,P,C,E`, plus `abs_A,abs_B,abs_C,P_up` in scatter mode.
std::string sweep_csv(const SweepConfig& config);

int cmd_sweep(const SweepConfig& config, std::ostream& out, std::ostream& err);

struct FindOptimalConfig {
  Mode mode = Mode::Scatter;
  double x_min = 0.0;
  double x_max = 0.0;
  int n_points = kDefaultPoints;   // ideal-mode scan grid
  std::optional<double> target_e;  // required in ideal mode
};

FindOptimalConfig default_find_optimal_config(Mode mode);

int cmd_find_optimal(const FindOptimalConfig& config, std::ostream& out, std::ostream& err);

struct SimulateConfig {
  int n_impurities = 2;
  double jt = 0.0;
  std::string initial;  // "u,dd" style; empty means electron up, impurities down
};

/// Parses "<electron>,<impurities>" such as "u,ddd" into site spins (electron first).
std::vector<Spin> parse_spin_string(std::string_view text, int n_impurities);

int cmd_simulate(const SimulateConfig& config, std::ostream& out, std::ostream& err);

}  // namespace spinent::cli
