// Copyright 2026 The spinent Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinent/cli.hpp"

#include <cctype>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "spinent/entanglement.hpp"
#include "spinent/grid.hpp"
#include "spinent/ideal_model.hpp"
#include "spinent/scattering_model.hpp"

namespace spinent::cli {

namespace {

constexpr double kPrintThreshold = 1e-12;

void write_row(std::ostream& os, std::initializer_list<double> values) {
  bool first = true;
  for (double v : values) {
    if (!first) os << ',';
    os << format_number(v);
    first = false;
  }
  os << '\n';
}

void warn_outside_series_range(Mode mode, double x_max, std::ostream& err) {
  if (mode == Mode::Scatter && x_max > kSeriesValidityMax) {
    err << "warning: the order-3 scattering series is only meant for j_rho in [0, 2]\n";
  }
}

std::string basis_label(std::size_t index, int n_sites) {
  std::string label;
  for (int site = 0; site < n_sites; ++site) {
    label += (index >> (n_sites - 1 - site)) & 1U ? 'd' : 'u';
    if (site == 0) label += ':';
  }
  return label;
}

void write_branch(std::ostream& os, const PostSelectedBranch& branch) {
  const char* name = branch.electron == Spin::Up ? "up" : "down";
  os << "# impurity pairs given electron " << name;
  if (branch.post_state.size() == 0) {
    os << ": impossible outcome\n";
    return;
  }
  os << "\ni,j,C,E\n";
  const auto n = branch.pair_concurrence.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double c = branch.pair_concurrence(i, j);
      os << i + 1 << ',' << j + 1 << ',' << format_number(c) << ','
         << format_number(eof_from_concurrence(c)) << '\n';
    }
  }
}

}  // namespace

Mode parse_mode(std::string_view name) {
  if (name == "ideal") return Mode::Ideal;
  if (name == "scatter") return Mode::Scatter;
  throw UsageError("unknown mode '" + std::string(name) + "' (expected ideal or scatter)");
}

std::string_view mode_name(Mode mode) { return mode == Mode::Ideal ? "ideal" : "scatter"; }

SweepConfig default_sweep_config(Mode mode) {
  SweepConfig c;
  c.mode = mode;
  c.x_min = 0.0;
  c.x_max = mode == Mode::Ideal ? std::numbers::pi / 2.0 : kSeriesValidityMax;
  return c;
}

void validate(const SweepConfig& config) {
  if (!std::isfinite(config.x_min) || !std::isfinite(config.x_max) ||
      !(config.x_min < config.x_max)) {
    throw UsageError("invalid range: need finite --min < --max");
  }
  if (config.n_points < 2) throw UsageError("invalid grid: --points must be at least 2");
  if (config.mode == Mode::Scatter && config.x_min < 0.0) {
    throw UsageError("invalid range: coupling j_rho must be non-negative");
  }
}

std::string format_number(double value) {
  if (value == 0.0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

std::string sweep_csv(const SweepConfig& config) {
  validate(config);
  const auto grid = uniform_grid(config.x_min, config.x_max, config.n_points);
  std::ostringstream os;
  if (config.mode == Mode::Ideal) {
    os << "x,P,C,E\n";
    for (const auto& p : sweep_ideal(grid)) write_row(os, {p.jt, p.p_down, p.concurrence, p.eof});
  } else {
    os << "x,P,C,E,abs_A,abs_B,abs_C,P_up\n";
    for (double x : grid) {
      const auto p = scatter_point(x);
      const auto amps = normalized_amplitudes(x);
      write_row(os, {p.j_rho, p.p_down, p.concurrence, p.eof, std::abs(amps.a),
                     std::abs(amps.b), std::abs(amps.c), std::norm(amps.a)});
    }
  }
  return os.str();
}

int cmd_sweep(const SweepConfig& config, std::ostream& out, std::ostream& err) {
  std::string table;
  try {
    table = sweep_csv(config);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  warn_outside_series_range(config.mode, config.x_max, err);

  if (config.output_path.empty() || config.output_path == "-") {
    out << table;
    return out ? kExitOk : kExitIo;
  }
  std::ofstream file(config.output_path, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "error: cannot open '" << config.output_path << "' for writing\n";
    return kExitIo;
  }
  file << table;
  file.close();
  if (!file) {
    err << "error: failed writing '" << config.output_path << "'\n";
    return kExitIo;
  }
  return kExitOk;
}

FindOptimalConfig default_find_optimal_config(Mode mode) {
  const SweepConfig sweep = default_sweep_config(mode);
  FindOptimalConfig c;
  c.mode = mode;
  c.x_min = sweep.x_min;
  c.x_max = sweep.x_max;
  return c;
}

int cmd_find_optimal(const FindOptimalConfig& config, std::ostream& out, std::ostream& err) {
  try {
    SweepConfig range;
    range.mode = config.mode;
    range.x_min = config.x_min;
    range.x_max = config.x_max;
    range.n_points = config.n_points;
    validate(range);

    if (config.mode == Mode::Ideal) {
      if (!config.target_e || !(*config.target_e >= 0.0 && *config.target_e <= 1.0)) {
        throw UsageError("ideal mode needs --target-e in [0, 1]");
      }
      const auto best = best_probability_for_target(*config.target_e, config.x_min, config.x_max,
                                                    config.n_points);
      if (!best) {
        out << "none found\n";
        return kExitOk;
      }
      out << "x,P,C,E\n";
      write_row(out, {best->jt, best->p_down, best->concurrence, best->eof});
      return kExitOk;
    }

    if (config.x_max > kSeriesValidityMax) {
      throw UsageError("scatter search range must lie within [0, 2]");
    }
    const auto roots = find_max_entanglement(config.x_min, config.x_max);
    if (roots.empty()) {
      out << "none found\n";
      return kExitOk;
    }
    out << "x,P,C,E\n";
    for (double j : roots) {
      const auto p = scatter_point(j);
      write_row(out, {p.j_rho, p.p_down, p.concurrence, p.eof});
    }
    return kExitOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

std::vector<Spin> parse_spin_string(std::string_view text, int n_impurities) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos || comma != 1) {
    throw UsageError("spin string must look like 'u,dd' (electron, impurities)");
  }
  const std::string_view impurities = text.substr(comma + 1);
  if (static_cast<int>(impurities.size()) != n_impurities) {
    throw UsageError("spin string lists " + std::to_string(impurities.size()) +
                     " impurities, expected " + std::to_string(n_impurities));
  }
  auto spin_of = [](char ch) {
    switch (std::tolower(static_cast<unsigned char>(ch))) {
      case 'u': return Spin::Up;
      case 'd': return Spin::Down;
      default: throw UsageError(std::string("bad spin '") + ch + "' (expected u or d)");
    }
  };
  std::vector<Spin> spins{spin_of(text[0])};
  for (char ch : impurities) spins.push_back(spin_of(ch));
  return spins;
}

int cmd_simulate(const SimulateConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.n_impurities < 1 || config.n_impurities > kMaxImpurities) {
      throw UsageError("--impurities must be between 1 and " + std::to_string(kMaxImpurities));
    }
    if (!std::isfinite(config.jt)) throw UsageError("--jt must be finite");
    const std::string initial =
        config.initial.empty() ? "u," + std::string(config.n_impurities, 'd') : config.initial;
    const auto spins = parse_spin_string(initial, config.n_impurities);

    const auto report = analyze_sequential(basis_state<double>(spins), config.jt,
                                           config.n_impurities);
    const int n_sites = config.n_impurities + 1;

    out << "# final state, electron:impurities, amplitudes above 1e-12\n";
    out << "state,re,im\n";
    for (Eigen::Index i = 0; i < report.final_state.size(); ++i) {
      const auto amp = report.final_state(i);
      if (std::abs(amp) <= kPrintThreshold) continue;
      out << basis_label(static_cast<std::size_t>(i), n_sites) << ',' << format_number(amp.real())
          << ',' << format_number(amp.imag()) << '\n';
    }
    out << "# electron measurement\n";
    out << "outcome,P\n";
    out << "up," << format_number(report.up.probability) << '\n';
    out << "down," << format_number(report.down.probability) << '\n';
    write_branch(out, report.up);
    write_branch(out, report.down);
    return kExitOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace spinent::cli
