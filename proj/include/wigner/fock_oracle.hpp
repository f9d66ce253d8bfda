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

#ifndef WIGNER_FOCK_ORACLE_HPP
#define WIGNER_FOCK_ORACLE_HPP

#include <Eigen/Dense>

#include "wigner/photon_stats_types.hpp"
#include "wigner/types.hpp"

namespace wigner {

/// Truncated Fock-basis density matrix on number states 0..dim-1.
/// The brute-force verification path: nothing in here knows about the
/// closed-form kernels, so agreement with them is evidence, not tautology.
struct FockDensityMatrix {
  Eigen::MatrixXcd rho;

  int dim() const { return static_cast<int>(rho.rows()); }
  double trace() const { return rho.trace().real(); }
  /// max |rho - rho^dagger| entrywise
  double hermiticity_error() const;
  /// smallest eigenvalue (self-adjoint solve); physical states are >= 0
  double min_eigenvalue() const;
};

/// Right-hand side of the Lindblad generator
///   L (2 a rho a+ - a+a rho - rho a+a) + G (2 a+ rho a - a a+ rho - rho a a+)
/// with (L, G) given by the channel kind.  Computed with index shifts in
/// O(dim^2).  Hermiticity of the input is preserved exactly.  The loss term
/// conserves trace exactly on the kept block; the gain term drains trace in
/// proportion to the top-level population, which is deliberate: trace drift
/// is then a direct, quantitative truncation detector.
Eigen::MatrixXcd lindblad_rhs(const FockDensityMatrix& rho, const ChannelParams& p);

/// Step count giving dt = min(0.01 / max_rate, t/100); at least 100 steps for
/// any t > 0 so step-halving checks have room to bite.
int default_steps(const ChannelParams& p);

/// default_steps plus an RK4 stability floor for the given basis size (the
/// generator's stiffest eigenvalue grows linearly with dim).  This is what
/// the steps-free evolve_density overload actually runs.
int planned_steps(const ChannelParams& p, int dim);

/// Classic fixed-step RK4 integration of the master equation over p.t,
/// re-Hermitizing after every step.  Throws TruncationError when the trace
/// drifts by more than 1e-5 (basis too small or dt too coarse).
FockDensityMatrix evolve_density(const FockDensityMatrix& rho0, const ChannelParams& p,
                                 int steps);
FockDensityMatrix evolve_density(const FockDensityMatrix& rho0, const ChannelParams& p);

/// Wigner value by displaced parity, W(alpha) = Tr[rho D(2 alpha) (-1)^n]/pi,
/// using the closed-form displacement matrix elements
///   <m|D(b)|n> = sqrt(n!/m!) b^{m-n} e^{-|b|^2/2} L_n^{(m-n)}(|b|^2),  m >= n.
/// The imaginary residue of the trace must stay below 1e-10 or an
/// AccuracyError is raised.
double wigner_from_density(const FockDensityMatrix& rho, PhasePoint alpha);

/// Estimated population that D(2 alpha) pushes past the truncation edge
/// (Chernoff bound on the displaced-vacuum Poisson tail).  When this is not
/// tiny, wigner_from_density values at that alpha are unreliable.
double displacement_tail_estimate(int dim, PhasePoint alpha);

/// The diagonal as a photon-number distribution; tail_bound is the mass the
/// kept block is missing (1 - trace).
PhotonNumberDistribution pnd_from_density(const FockDensityMatrix& rho);

/// Fock-space size adequate for evolving `spec` through channel `p`: covers
/// the initial occupation, the bath/gain occupation actually reached at time
/// p.t, plus an 8-sigma-style margin.  Throws TruncationError above the hard
/// cap of 256 (amplification regimes eventually outgrow any dense basis).
int oracle_n_max(const StateSpec& spec, const ChannelParams& p);

}  // namespace wigner

#endif  // WIGNER_FOCK_ORACLE_HPP
