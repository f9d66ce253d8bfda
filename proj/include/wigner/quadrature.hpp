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

#ifndef WIGNER_QUADRATURE_HPP
#define WIGNER_QUADRATURE_HPP

#include <complex>
#include <utility>
#include <vector>

#include "wigner/types.hpp"

namespace wigner {

/// Default per-axis Gauss-Legendre order.  Every integrand handled here is a
/// Gaussian times a low-degree polynomial, so convergence is exponential and
/// 64 nodes reach machine precision on a well-chosen box.
inline constexpr int kDefaultQuadOrder = 64;

/// Gauss-Legendre nodes and weights on [-1, 1].  Results are cached per
/// order; the call is thread-safe.
const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int order);

/// A tensor-product Gauss-Legendre rule on the square box
///   [center.re - half_width, center.re + half_width] x
///   [center.im - half_width, center.im + half_width].
struct QuadratureRule {
  std::vector<double> nodes;    ///< abscissas on [-1, 1], one axis
  std::vector<double> weights;  ///< matching weights, all positive
  int order;
  PhasePoint center;
  double half_width;

  QuadratureRule(int order_, PhasePoint center_, double half_width_);
};

/// Tensor-product approximation of the plain area integral
///   \int\int f(x + i y) dx dy
/// over the rule's box.  Any 1/pi measure is the caller's business.
template <typename F>
std::complex<double> integrate_2d(F&& f, const QuadratureRule& rule) {
  const double h = rule.half_width;
  const int n = rule.order;
  std::complex<double> acc{0.0, 0.0};
  for (int i = 0; i < n; ++i) {
    const double x = rule.center.real() + h * rule.nodes[i];
    std::complex<double> row{0.0, 0.0};
    for (int j = 0; j < n; ++j) {
      const double y = rule.center.imag() + h * rule.nodes[j];
      row += rule.weights[j] * f(PhasePoint(x, y));
    }
    acc += rule.weights[i] * row;
  }
  return acc * (h * h);
}

// ---------------------------------------------------------------------------
// Gaussian envelopes: automatic box selection
// ---------------------------------------------------------------------------

/// Describes a dominating bound |f(beta)| <~ poly_deg(beta) * exp(-q |beta - c|^2).
/// The center is stored precision-weighted (qc = q * c) so that envelopes of
/// nearly flat Gaussians (q -> 0 with q*c finite, as produced by long-time
/// evolution kernels) remain representable; combining two envelopes then never
/// divides by a vanishing precision.
struct GaussianEnvelope {
  double precision = 2.0;             ///< q > 0 after any combination step
  PhasePoint weighted_center{0, 0};   ///< q * c
  int poly_degree = 0;                ///< total polynomial degree in (beta, conj beta)

  static GaussianEnvelope at(PhasePoint center, double precision, int poly_degree = 0) {
    return GaussianEnvelope{precision, precision * center, poly_degree};
  }
  PhasePoint center() const { return weighted_center / precision; }
};

/// Product of two Gaussian envelopes (precisions add, centers combine with
/// precision weights, polynomial degrees add).
GaussianEnvelope combine(const GaussianEnvelope& a, const GaussianEnvelope& b);

/// Per-axis order sufficient for the envelope's integrands: the box chosen
/// below spans s Gaussian scale units, the Gaussian's Chebyshev bandwidth
/// over it is ~s^2/2, and the polynomial factor adds its degree.  Never less
/// than `base`; for degree 0 this IS `base`, and it grows once high-degree
/// factors (large photon-number cutoffs) widen the box.
int auto_order(const GaussianEnvelope& env, int base = kDefaultQuadOrder);

/// Chooses a box large enough that the envelope's mass outside it is below
/// machine noise: solves s^2 - deg*ln(max(s,1)) ~ 41 for the half-width in
/// units of the Gaussian scale 1/sqrt(q).
QuadratureRule rule_for(const GaussianEnvelope& env, int order = kDefaultQuadOrder);

/// Integrates with the rule and re-integrates at twice the order; throws
/// AccuracyError when the two values differ by more than tol.  Used behind
/// verification flags -- the plain path trusts the envelope analysis.
template <typename F>
std::complex<double> integrate_2d_checked(F&& f, const GaussianEnvelope& env,
                                          int order, double tol) {
  const std::complex<double> coarse = integrate_2d(f, rule_for(env, order));
  const std::complex<double> fine = integrate_2d(f, rule_for(env, 2 * order));
  if (std::abs(fine - coarse) > tol) {
    throw AccuracyError("2-D quadrature failed to converge: order " +
                        std::to_string(order) + " vs " + std::to_string(2 * order) +
                        " differ by " + std::to_string(std::abs(fine - coarse)));
  }
  return fine;
}

}  // namespace wigner

#endif  // WIGNER_QUADRATURE_HPP
