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

#ifndef WIGNER_EVOLUTION_HPP
#define WIGNER_EVOLUTION_HPP

#include <complex>
#include <functional>

#include "wigner/quadrature.hpp"
#include "wigner/states.hpp"
#include "wigner/types.hpp"

namespace wigner {

/// Channel kernel factors.  All three channels act on the Wigner function as
/// the same Gaussian convolution,
///   W(alpha, t) = (2/A) \int (d^2beta / pi) e^{-(2/A)|alpha - beta*decay|^2}
///                 W(beta, 0),
/// differing only in the width A and the shrink factor `decay`:
///   damping:  A = T = 1 - e^{-2 kappa t},            decay = e^{-kappa t}
///   laser:    A = (kappa+g)/(kappa-g) (1 - e^{-2(kappa-g)t}),
///                                                    decay = e^{-(kappa-g)t}
///   thermal:  A = (2 nbar + 1) T,                    decay = e^{-kappa t}
/// T always denotes 1 - decay^2.
struct KernelFactors {
  double T = 0.0;
  double A = 0.0;
  double decay = 1.0;
};

/// Computes the kernel factors; at kappa = g the laser width takes its
/// analytic limit A = 2 (kappa + g) t (the 0/0 form is removable, as a
/// first-order expansion of the exponential shows).
KernelFactors kernel_factors(const ChannelParams& p);

/// Options for the quadrature evolution path.
struct EvolveOptions {
  /// Envelope bounding the initial Wigner function; defaults to the vacuum
  /// Gaussian.  Pass state_envelope(spec) for anything else.
  GaussianEnvelope state_env = GaussianEnvelope::at({0.0, 0.0}, 2.0, 0);
  /// Per-axis quadrature order; <= 0 picks it from the envelope analysis.
  int order = 0;
  /// When set, every integral is recomputed at doubled order and an
  /// AccuracyError is raised if the two disagree beyond `tol`.
  bool convergence_check = false;
  double tol = 1e-10;
};

/// Evolved Wigner value at `alpha` by direct quadrature of the convolution
/// kernel against an arbitrary initial Wigner function.  At t = 0 the kernel
/// degenerates to a delta and w0(alpha) is returned directly.
double evolve_wigner(const std::function<double(PhasePoint)>& w0, const ChannelParams& p,
                     PhasePoint alpha, const EvolveOptions& opts = {});

/// Convenience wrapper wiring in the initial Wigner function and envelope of
/// a tagged state description.
double evolve_state(const StateSpec& spec, const ChannelParams& p, PhasePoint alpha,
                    const EvolveOptions& opts = {});

/// Closed-form evolved Wigner function of a photon-added coherent state in
/// the pure damping channel: with r = e^{-kappa t}, c = 1 - 2 r^2,
/// B = 2 alpha r + z c,
///   W = e^{-2|alpha - z r|^2} / (pi L_m(-|z|^2))
///       * sum_{k=0}^m C(m,k) |B|^{2k} c^{m-k} / k!.
/// The sum is the expansion of c^m L_m(-|B|^2/c): a polynomial in c, so the
/// parity time c = 0 (kappa t = ln2 / 2) is evaluated exactly rather than as
/// a 0 * infinity limit.
double evolve_pacs_damping(int m, std::complex<double> z, double kappa, double t,
                           PhasePoint alpha);

/// Closed-form evolved Wigner function of a photon-added coherent state in a
/// thermal bath, transcribed exactly as printed in its source derivation.
/// KNOWN CAVEAT: for nbar > 0 this expression disagrees with the (authoritative)
/// convolution quadrature of the same initial state -- see the verification
/// report, which quantifies the deviation.  At nbar = 0 it reduces exactly to
/// evolve_pacs_damping.  Requires t > 0.
double evolve_pacs_thermal(int m, std::complex<double> z, double kappa, double nbar,
                           double t, PhasePoint alpha);

/// Threshold kappa*t beyond which the evolved photon-added-coherent Wigner
/// function is everywhere nonnegative:  kt_c = ln(2(nbar+1)/(2 nbar + 1)) / 2.
double positivity_time(double nbar);

}  // namespace wigner

#endif  // WIGNER_EVOLUTION_HPP
