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

#ifndef WIGNER_PHOTON_STATS_HPP
#define WIGNER_PHOTON_STATS_HPP

#include <complex>
#include <functional>

#include "wigner/evolution.hpp"
#include "wigner/photon_stats_types.hpp"
#include "wigner/quadrature.hpp"
#include "wigner/types.hpp"

namespace wigner {

/// The scalar factors of the closed-form photon-number distribution of an
/// evolved photon-added coherent state:
///   sigma = decay / sqrt(1 - A^2)   (real only while |A| < 1),
///   mu    = 1 + decay^2 / (A + 1),
///   omega = (2 - mu) / mu,          lambda = 2 sigma / mu,
///   Nfac  = 4 (A - 1)^n / (A + 1)^{n+1} * (-1)^m / L_m(-|z|^2).
struct PndFactors {
  double omega = 0.0;
  double lambda = 0.0;
  double sigma = 0.0;
  double mu = 0.0;
  double Nfac = 0.0;
};

/// Factors for channel `p`; Nfac is evaluated for the given (m, z, n).
/// Throws std::domain_error when A >= 1 (sigma leaves the reals; the closed
/// form does not apply there).
PndFactors pnd_factors(const ChannelParams& p, int m, std::complex<double> z, int n);

/// Photon-number probabilities of a state given only its Wigner function,
///   p(n) = 4 pi \int d^2alpha  W_{|n><n|}(alpha) W(alpha);
/// the prefactor is the standard pi-overlap rule restated for the half
/// normalization used throughout (each factor carries 1/2 of the usual mass).
/// `env` must dominate |w|; probabilities outside [-1e-9, 1+1e-9] raise
/// AccuracyError.  order <= 0 (the default) picks the order from the
/// envelope analysis, growing with n_cut.
PhotonNumberDistribution pnd_overlap(const std::function<double(PhasePoint)>& w,
                                     int n_cut, const GaussianEnvelope& env,
                                     int order = 0);

/// Photon-number distribution after channel evolution, folded into a single
/// integral over the *initial* Wigner function: with E = decay^2,
///   p(n) = 4 / (A+1)^{n+1} \int d^2beta  e^{-2E|beta|^2/(A+1)}
///          S_n(4E|beta|^2/(A+1))  w0(beta),
///   S_n(u) = sum_k (-1)^{n+k} C(n,k) u^k (1-A)^{n-k} / k!
/// S_n is the exact binomial expansion of (A-1)^n L_n(u/(1-A)) -- a
/// polynomial in A, so A = 1 needs no special casing.  At t = 0 (A = 0,
/// E = 1) the expression collapses to the pnd_overlap formula.  order <= 0
/// (the default) picks the order from the envelope analysis.
PhotonNumberDistribution pnd_evolved(const std::function<double(PhasePoint)>& w0,
                                     const ChannelParams& p, int n_cut,
                                     const GaussianEnvelope& state_env,
                                     int order = 0);

/// Fully closed-form p(n) for an evolved photon-added coherent state
/// (damping and laser channels).  The general expression is the double sum
///   p(n) = Nfac lambda^{2n} e^{(2-2mu)|z|^2/mu} / (2 mu (-omega)^{n-m})
///          sum_{l,k} m! n! [omega (lambda sigma - 1)/lambda^2]^k
///          / (l! k! ((m-l)! (n-k)!)^2) |H_{m-l,n-k}(i sqrt(omega) z,
///                                                   i sqrt(omega) z*)|^2,
/// accumulated in log-magnitude + sign form; for g = 0 the simplified
/// single-sum branch (lambda sigma = 1, omega = T) is used instead and the
/// two branches agree to 1e-10.  When A >= 1 the closed form does not exist
/// over the reals: the quadrature path is returned instead and
/// *used_fallback (when given) is set.
double pnd_pacs_closed(int m, std::complex<double> z, const ChannelParams& p, int n,
                       bool* used_fallback = nullptr);

namespace detail {

/// The unsimplified double-sum branch of pnd_pacs_closed, exposed so tests
/// can pin the g = 0 algebraic collapse against the single-sum branch.
/// Requires t > 0 and A < 1.
double pnd_pacs_closed_general(int m, std::complex<double> z, const ChannelParams& p,
                               int n);

}  // namespace detail

/// Default cut covering mean + 8 sigma of a distribution with the given mean.
int default_n_cut(double mean);

/// Mean photon number sum n p(n).  Requires tail_bound < 1e-6; a heavier
/// tail means the mean is not trustworthy and raises AccuracyError.
double mean_photon(const PhotonNumberDistribution& pnd);

}  // namespace wigner

#endif  // WIGNER_PHOTON_STATS_HPP
