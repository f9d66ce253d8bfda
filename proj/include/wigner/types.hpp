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

#ifndef WIGNER_TYPES_HPP
#define WIGNER_TYPES_HPP

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <variant>

namespace wigner {

/// Phase-space coordinate alpha = re + i*im (dimensionless quadrature pair).
using PhasePoint = std::complex<double>;

/// Raised when a numerical result fails its internal accuracy check
/// (quadrature non-convergence, heavy distribution tails, ...).
class AccuracyError : public std::runtime_error {
 public:
  explicit AccuracyError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a truncated Fock-space representation cannot hold the state
/// to the required tail mass (basis too small, amplification overflow, ...).
class TruncationError : public std::runtime_error {
 public:
  explicit TruncationError(const std::string& what) : std::runtime_error(what) {}
};

// ---------------------------------------------------------------------------
// Initial-state description
// ---------------------------------------------------------------------------

/// Support limits of the polynomial evaluators; states beyond these would
/// need asymptotic special-function branches that this library does not carry.
inline constexpr int kMaxNumber = 64;
inline constexpr int kMaxPhotonAdded = 30;

struct NumberState {
  int n = 0;
};

struct CoherentState {
  std::complex<double> z{0.0, 0.0};
};

/// Photon-added coherent state ~ a^{dag m} |z>, normalized.
struct PacsState {
  int m = 0;
  std::complex<double> z{0.0, 0.0};
};

struct ThermalState {
  double nbar = 0.0;
};

using StateSpec = std::variant<NumberState, CoherentState, PacsState, ThermalState>;

/// Throws std::domain_error when the spec violates the support limits.
void validate(const StateSpec& spec);

/// Human-readable tag, e.g. "pacs(m=1,z=1+0i)".
std::string describe(const StateSpec& spec);

/// Exact mean photon number of the initial state.
double initial_mean_photon(const StateSpec& spec);

// ---------------------------------------------------------------------------
// Channel description
// ---------------------------------------------------------------------------

enum class ChannelKind { Damping, Laser, Thermal };

/// Parameters of the Lindblad generator
///   drho/dt = L(2 a rho a+ - a+a rho - rho a+a) + G(2 a+ rho a - a a+ rho - rho a a+)
/// with (L, G) = (kappa, 0) for pure damping, (kappa, g) for the gain-loss
/// (laser) channel, and (kappa(nbar+1), kappa nbar) for a thermal bath.
struct ChannelParams {
  ChannelKind kind = ChannelKind::Damping;
  double kappa = 1.0;  ///< loss rate, 1/time
  double g = 0.0;      ///< gain rate (laser channel only), 1/time
  double nbar = 0.0;   ///< bath occupation (thermal channel only)
  double t = 0.0;      ///< evolution time
};

/// Throws std::domain_error on inconsistent parameters (e.g. damping with
/// g != 0, kappa <= 0, negative time).
void validate(const ChannelParams& p);

/// Effective Lindblad loss coefficient L.
double loss_rate(const ChannelParams& p);

/// Effective Lindblad gain coefficient G.
double gain_rate(const ChannelParams& p);

/// Net amplitude-decay rate: the evolved field amplitude shrinks as
/// exp(-net_decay_rate * t).  Equals kappa for damping/thermal, kappa - g
/// for the laser channel (negative when the gain dominates).
double net_decay_rate(const ChannelParams& p);

std::string describe(const ChannelParams& p);

}  // namespace wigner

#endif  // WIGNER_TYPES_HPP
