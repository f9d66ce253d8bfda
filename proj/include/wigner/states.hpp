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

#ifndef WIGNER_STATES_HPP
#define WIGNER_STATES_HPP

#include <complex>

#include "wigner/fock_oracle.hpp"
#include "wigner/quadrature.hpp"
#include "wigner/types.hpp"

namespace wigner {

// Initial-state Wigner functions.  Everything in this library uses the
// half-normalization tied to the displaced-parity operator
//   W(alpha) = Tr[rho D(2 alpha) (-1)^{a+a}] / pi,
// under which \int W d^2alpha = 1/2.  Callers who want the conventional
// \int W = 1 multiply by 2 (the CLI's --std-normalization flag).

/// Number state |n><n|:  W = ((-1)^n / pi) e^{-2|alpha|^2} L_n(4 |alpha|^2).
double wigner_number(int n, PhasePoint alpha);

/// Coherent state |z><z|:  W = (1/pi) e^{-2 |alpha - z|^2}.
double wigner_coherent(std::complex<double> z, PhasePoint alpha);

/// Photon-added coherent state ~ a^{dag m}|z>:
///   W = ((-1)^m e^{-2|alpha - z|^2} / (pi L_m(-|z|^2))) L_m(|2 alpha - z|^2).
double wigner_pacs(int m, std::complex<double> z, PhasePoint alpha);

/// Thermal state of occupation nbar:
///   W = (1 / (pi (2 nbar + 1))) e^{-2 |alpha|^2 / (2 nbar + 1)}.
double wigner_thermal(double nbar, PhasePoint alpha);

/// Dispatch on the tagged state description.
double wigner_initial(const StateSpec& spec, PhasePoint alpha);

/// Dominating Gaussian envelope of the state's Wigner function, used to
/// size quadrature boxes.
GaussianEnvelope state_envelope(const StateSpec& spec);

/// Fock truncation covering the state to tail mass ~1e-10:
/// ceil(|z|^2 + m + 8 sqrt(|z|^2 + m + 1)) clamped to >= 16 for the pure
/// states; thermal states instead need the geometric tail cut, which decays
/// far more slowly than any Poissonian.
int default_n_max(const StateSpec& spec);

/// Truncated density matrix of the state, trace-renormalized to exactly 1.
/// Throws TruncationError (reporting the measured tail mass) when n_max
/// leaves more than 1e-10 of the state outside the kept block.
FockDensityMatrix fock_density(const StateSpec& spec, int n_max);
FockDensityMatrix fock_density(const StateSpec& spec);

}  // namespace wigner

#endif  // WIGNER_STATES_HPP
