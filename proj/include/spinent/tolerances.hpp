// Copyright 2026 The spinent Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace spinent::tol {

// Elementwise agreement for algebraic identities (norms, unitarity, Hermiticity).
inline constexpr double kAlgebraic = 1e-12;

// Eigenvalue comparisons and PSD checks.
inline constexpr double kSpectral = 1e-10;

// A measurement branch with probability below this is reported as impossible.
inline constexpr double kImpossibleOutcome = 1e-15;

// Round-off allowed on a concurrence before it is treated as a bug.
inline constexpr double kConcurrenceClamp = 1e-9;

}  // namespace spinent::tol
