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

// Continuous distributions needed by the tests. Incomplete beta and gamma
// functions are evaluated with modified-Lentz continued fractions (and a
// power series for the lower gamma branch) to ~1e-14 relative accuracy.
// Throws ConvergenceError if a fraction fails to settle, InvalidArgument on
// out-of-domain parameters.

namespace fraccite::dist {

/// Regularized incomplete beta I_x(a, b).
double incomplete_beta(double a, double b, double x);

/// Regularized lower / upper incomplete gamma P(a, x), Q(a, x).
double gamma_p(double a, double x);
double gamma_q(double a, double x);

double normal_pdf(double z);
double normal_cdf(double z);
/// 1 - Phi(z) without cancellation.
double normal_sf(double z);
/// Phi^{-1}(p), Wichura AS241 (about 1e-16 relative).
double normal_quantile(double p);

/// Student t with `df` degrees of freedom.
double t_cdf(double t, double df);
/// P(|T| >= |t|).
double t_two_sided_p(double t, double df);

/// P(F >= f) for F(d1, d2).
double f_sf(double f, double d1, double d2);

/// P(X >= x) for chi-square with `df` degrees of freedom.
double chi2_sf(double x, double df);

}  // namespace fraccite::dist
