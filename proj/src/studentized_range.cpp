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

#include "fraccite/studentized_range.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <tuple>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/tools/roots.hpp>

#include "fraccite/distributions.hpp"
#include "fraccite/error.hpp"

namespace fraccite {

namespace {

using Gauss = boost::math::quadrature::gauss<double, 20>;

// Integrates f over [a, b] split into `panels` equal Gauss-Legendre panels.
template <typename F>
double composite(F&& f, double a, double b, int panels) {
  double h = (b - a) / panels;
  double sum = 0.0;
  for (int i = 0; i < panels; ++i) {
    double lo = a + i * h;
    sum += Gauss::integrate(f, lo, lo + h);
  }
  return sum;
}

// P(range of k standard normals <= w).
double range_cdf_known_sigma(double w, int k) {
  if (w <= 0) return 0.0;
  double inner = composite(
      [&](double z) {
        double d = dist::normal_cdf(z) - dist::normal_cdf(z - w);
        if (d <= 0) return 0.0;
        return dist::normal_pdf(z) * std::pow(d, k - 1);
      },
      -8.5, 8.5 + std::min(w, 8.0), 24);
  return std::clamp(k * inner, 0.0, 1.0);
}

}  // namespace

double studentized_range_cdf(double q, int k, double nu) {
  if (k < 2) throw InvalidArgument("studentized range needs k >= 2, got " + std::to_string(k));
  if (!(nu >= 1)) throw InvalidArgument("studentized range needs nu >= 1, got " + std::to_string(nu));
  if (q <= 0) return 0.0;
  if (std::isinf(q)) return 1.0;
  if (std::isinf(nu)) return range_cdf_known_sigma(q, k);

  // Density of S = sqrt(chi2_nu / nu), in logs to stay finite for large nu.
  double log_norm = 0.5 * nu * std::log(nu) - std::lgamma(0.5 * nu) - (0.5 * nu - 1.0) * std::log(2.0);
  auto log_density = [&](double s) { return log_norm + (nu - 1.0) * std::log(s) - 0.5 * nu * s * s; };
  double center = nu > 1 ? std::sqrt((nu - 1.0) / nu) : 0.0;
  double half = 9.0 / std::sqrt(nu);
  double lo = std::max(0.0, center - half);
  double hi = center + half;

  auto integrand = [&](double s) {
    if (s <= 0) return 0.0;
    double ld = log_density(s);
    if (ld < -745) return 0.0;
    return std::exp(ld) * range_cdf_known_sigma(q * s, k);
  };
  // The inner cdf climbs from 0 to 1 for q*s below ~12; for small nu and
  // large q that happens in a sliver near s = 0, so it gets its own panels.
  double mid = std::clamp(12.0 / q, lo, hi);
  double total = composite(integrand, lo, mid, 16) + composite(integrand, mid, hi, 16);
  return std::clamp(total, 0.0, 1.0);
}

double studentized_range_quantile(double alpha, int k, double nu) {
  if (!(alpha > 0 && alpha < 1)) throw InvalidArgument("alpha must lie in (0,1), got " + std::to_string(alpha));
  if (k < 2) throw InvalidArgument("studentized range needs k >= 2, got " + std::to_string(k));
  if (!(nu >= 1)) throw InvalidArgument("studentized range needs nu >= 1, got " + std::to_string(nu));

  static std::mutex mu;
  static std::map<std::tuple<double, int, double>, double> cache;
  auto key = std::make_tuple(alpha, k, nu);
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }

  double target = 1.0 - alpha;
  auto f = [&](double q) { return studentized_range_cdf(q, k, nu) - target; };

  double a = 0.0, b = 4.0;
  double fa = -target, fb = f(b);
  int grow = 0;
  while (fb < 0) {
    a = b;
    fa = fb;
    b *= 2.0;
    fb = f(b);
    if (++grow > 12)
      throw ConvergenceError("studentized range quantile: no upper bracket below q=" + std::to_string(b) +
                             " (alpha=" + std::to_string(alpha) + ", k=" + std::to_string(k) +
                             ", nu=" + std::to_string(nu) + ")");
  }
  std::uintmax_t iters = 100;
  auto tol = [](double x, double y) { return std::fabs(x - y) < 1e-8; };
  auto [r_lo, r_hi] = boost::math::tools::toms748_solve(f, a, b, fa, fb, tol, iters);
  if (iters >= 100)
    throw ConvergenceError("studentized range quantile did not converge: bracket [" + std::to_string(r_lo) + ", " +
                           std::to_string(r_hi) + "] after 100 iterations (alpha=" + std::to_string(alpha) +
                           ", k=" + std::to_string(k) + ", nu=" + std::to_string(nu) + ")");
  double q = 0.5 * (r_lo + r_hi);
  std::lock_guard lock(mu);
  cache.emplace(key, q);
  return q;
}

}  // namespace fraccite
