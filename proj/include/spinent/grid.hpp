// Copyright 2026 The spinent Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace spinent {

// n points from lo to hi inclusive; the last point is exactly hi.
inline std::vector<double> uniform_grid(double lo, double hi, int n) {
  if (n < 1) throw std::invalid_argument("uniform_grid: need at least one point");
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw std::invalid_argument("uniform_grid: non-finite bound");
  }
  if (n == 1) return {lo};
  std::vector<double> grid(n);
  const double step = (hi - lo) / (n - 1);
  for (int k = 0; k < n; ++k) grid[k] = lo + step * k;
  grid.back() = hi;
  return grid;
}

}  // namespace spinent
