/*
 * Copyright 2026 The fraccite Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <limits>

namespace fraccite {

inline constexpr double kInfiniteDf = std::numeric_limits<double>::infinity();

/// P(Q <= q) for the studentized range of k independent standard normals
/// divided by an independent sqrt(chi2_nu / nu). Pass kInfiniteDf for the
/// known-variance case.
///
/// Double integral over the scale s and the minimum z, both by composite
/// 20-point Gauss-Legendre panels; absolute error below 1e-9 for
/// 2 <= k <= 100, nu >= 1.
double studentized_range_cdf(double q, int k, double nu);

/// q with P(Q > q) = alpha, found by bracketed TOMS 748 root finding on
/// studentized_range_cdf to |dq| < 1e-8. Results are memoized per
/// (alpha, k, nu); safe to call concurrently.
///
/// Throws InvalidArgument outside 0 < alpha < 1, k >= 2, nu >= 1, and
/// ConvergenceError (with the bracket reached) if the root finder fails.
double studentized_range_quantile(double alpha, int k, double nu);

}  // namespace fraccite
