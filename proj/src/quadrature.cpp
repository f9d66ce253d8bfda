// Copyright 2026 The wignersim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "wigner/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace wigner {

namespace {

/// Gauss-Legendre nodes by Newton iteration on the Legendre recurrence,
/// seeded with the Chebyshev-like asymptotic root estimate.  Symmetric pairs
/// are filled from one half.
std::pair<std::vector<double>, std::vector<double>> compute_gauss_legendre(int n) {
  std::vector<double> x(n), w(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      // Evaluate P_n(z) and P'_n(z) by upward recurrence.
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    w[n - 1 - i] = w[i];
  }
  return {std::move(x), std::move(w)};
}

}  // namespace

const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int order) {
  if (order < 2) throw std::domain_error("gauss_legendre: order must be >= 2");
  static std::mutex mtx;
  static std::map<int, std::pair<std::vector<double>, std::vector<double>>> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(order);
  if (it == cache.end()) {
    it = cache.emplace(order, compute_gauss_legendre(order)).first;
  }
  return it->second;
}

QuadratureRule::QuadratureRule(int order_, PhasePoint center_, double half_width_)
    : order(order_), center(center_), half_width(half_width_) {
  if (half_width_ <= 0.0 || !std::isfinite(half_width_)) {
    throw std::domain_error("QuadratureRule: half_width must be finite and positive");
  }
  const auto& [x, w] = gauss_legendre(order_);
  nodes = x;
  weights = w;
}

GaussianEnvelope combine(const GaussianEnvelope& a, const GaussianEnvelope& b) {
  GaussianEnvelope out;
  out.precision = a.precision + b.precision;
  out.weighted_center = a.weighted_center + b.weighted_center;
  out.poly_degree = a.poly_degree + b.poly_degree;
  if (out.precision <= 0.0) {
    throw std::domain_error("combine: envelopes must carry positive total precision");
  }
  return out;
}

namespace {

// Box half-width in Gaussian scale units: want exp(-s^2) * s^deg below
// ~1e-18 at the box edge, so fixed-point iterate s^2 = 41 + deg*ln(max(s,1)).
double box_scale_units(int poly_degree) {
  const double deg = static_cast<double>(poly_degree);
  double s = std::sqrt(41.0 + 3.0 * deg);
  for (int it = 0; it < 4; ++it) {
    s = std::sqrt(41.0 + deg * std::log(std::max(s, 1.0)));
  }
  return s;
}

}  // namespace

int auto_order(const GaussianEnvelope& env, int base) {
  const double s = box_scale_units(env.poly_degree);
  // Chebyshev coefficients of exp(-s^2 xi^2) on [-1, 1] die off past index
  // ~s^2/2; the polynomial factor adds its degree on top.  A Gauss-Legendre
  // rule of order N integrates that bandwidth once 2N exceeds it, so s^2/2 +
  // deg + margin nodes resolve the integrand to machine precision.
  const int needed =
      static_cast<int>(std::ceil(0.5 * s * s)) + env.poly_degree + 16;
  return std::max(base, needed);
}

QuadratureRule rule_for(const GaussianEnvelope& env, int order) {
  if (env.precision <= 0.0) {
    throw std::domain_error("rule_for: envelope precision must be positive");
  }
  const double s = box_scale_units(env.poly_degree);
  const double half_width = s / std::sqrt(env.precision);
  return QuadratureRule(order, env.center(), half_width);
}

}  // namespace wigner
