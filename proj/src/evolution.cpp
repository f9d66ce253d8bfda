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

#include "wigner/evolution.hpp"

#include <cmath>
#include <numbers>

#include "wigner/special.hpp"

namespace wigner {

namespace {

constexpr double kPi = std::numbers::pi;

double ipow(double x, int k) {
  double out = 1.0;
  for (int i = 0; i < k; ++i) out *= x;
  return out;
}

/// sum_{k=0}^{m} C(m,k) b2^k a^{m-k} / k!  with b2 = |B|^2 >= 0.
/// This is the scaled-Laguerre polynomial a^m L_m(-b2/a) written as a plain
/// polynomial in a, so a = 0 (and a < 0) need no special casing.
double scaled_laguerre_sum(int m, double b2, double a) {
  double sum = 0.0;
  double b2k = 1.0;  // b2^k
  for (int k = 0; k <= m; ++k) {
    const double coeff = std::exp(log_factorial(m) - log_factorial(m - k) -
                                  2.0 * log_factorial(k));
    sum += coeff * b2k * ipow(a, m - k);
    b2k *= b2;
  }
  return sum;
}

}  // namespace

KernelFactors kernel_factors(const ChannelParams& p) {
  validate(p);
  KernelFactors f;
  switch (p.kind) {
    case ChannelKind::Damping: {
      f.decay = std::exp(-p.kappa * p.t);
      f.T = -std::expm1(-2.0 * p.kappa * p.t);
      f.A = f.T;
      break;
    }
    case ChannelKind::Laser: {
      const double d = p.kappa - p.g;
      f.decay = std::exp(-d * p.t);
      f.T = -std::expm1(-2.0 * d * p.t);
      // expm1 keeps (1 - e^{-2dt})/d accurate arbitrarily close to d = 0;
      // only d == 0 itself needs the analytic limit.
      f.A = d == 0.0 ? 2.0 * (p.kappa + p.g) * p.t : (p.kappa + p.g) / d * f.T;
      break;
    }
    case ChannelKind::Thermal: {
      f.decay = std::exp(-p.kappa * p.t);
      f.T = -std::expm1(-2.0 * p.kappa * p.t);
      f.A = (2.0 * p.nbar + 1.0) * f.T;
      break;
    }
  }
  return f;
}

double evolve_wigner(const std::function<double(PhasePoint)>& w0, const ChannelParams& p,
                     PhasePoint alpha, const EvolveOptions& opts) {
  const KernelFactors f = kernel_factors(p);
  if (p.t == 0.0 || f.A == 0.0) return w0(alpha);

  const double q_kernel = 2.0 * f.decay * f.decay / f.A;
  GaussianEnvelope kernel_env;
  kernel_env.precision = q_kernel;
  kernel_env.weighted_center = 2.0 * f.decay / f.A * alpha;  // q * (alpha / decay)
  kernel_env.poly_degree = 0;
  const GaussianEnvelope env = combine(kernel_env, opts.state_env);

  const double scale = 2.0 / f.A;
  auto integrand = [&](PhasePoint beta) {
    return std::exp(-scale * std::norm(alpha - beta * f.decay)) * w0(beta);
  };
  const int order = opts.order > 0 ? opts.order : auto_order(env);
  const std::complex<double> raw =
      opts.convergence_check ? integrate_2d_checked(integrand, env, order, opts.tol)
                             : integrate_2d(integrand, rule_for(env, order));
  return scale / kPi * raw.real();
}

double evolve_state(const StateSpec& spec, const ChannelParams& p, PhasePoint alpha,
                    const EvolveOptions& opts) {
  validate(spec);
  EvolveOptions local = opts;
  local.state_env = state_envelope(spec);
  return evolve_wigner([&spec](PhasePoint beta) { return wigner_initial(spec, beta); }, p,
                       alpha, local);
}

double evolve_pacs_damping(int m, std::complex<double> z, double kappa, double t,
                           PhasePoint alpha) {
  if (m < 0 || m > kMaxPhotonAdded) {
    throw std::domain_error("evolve_pacs_damping: m outside [0, 30]");
  }
  if (!(kappa > 0.0) || !std::isfinite(kappa)) {
    throw std::domain_error("evolve_pacs_damping: kappa must be finite and > 0");
  }
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw std::domain_error("evolve_pacs_damping: t must be finite and >= 0");
  }
  const double r = std::exp(-kappa * t);
  const double c = 1.0 - 2.0 * r * r;
  const std::complex<double> big_b = 2.0 * alpha * r + z * c;
  const double gauss = std::exp(-2.0 * std::norm(alpha - z * r));
  const double norm_m = laguerre(m, -std::norm(z));
  return gauss * scaled_laguerre_sum(m, std::norm(big_b), c) / (kPi * norm_m);
}

double evolve_pacs_thermal(int m, std::complex<double> z, double kappa, double nbar,
                           double t, PhasePoint alpha) {
  if (m < 0 || m > kMaxPhotonAdded) {
    throw std::domain_error("evolve_pacs_thermal: m outside [0, 30]");
  }
  if (!(kappa > 0.0) || !std::isfinite(kappa)) {
    throw std::domain_error("evolve_pacs_thermal: kappa must be finite and > 0");
  }
  if (!(nbar >= 0.0) || !std::isfinite(nbar)) {
    throw std::domain_error("evolve_pacs_thermal: nbar must be finite and >= 0");
  }
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw std::domain_error("evolve_pacs_thermal: t must be finite and > 0");
  }
  const double r = std::exp(-kappa * t);     // e^{-kappa t}
  const double e2 = r * r;                   // e^{-2 kappa t}
  const double big_t = -std::expm1(-2.0 * kappa * t);  // 1 - e^{-2 kappa t}
  const double nt = nbar * big_t;
  const double two_nt = 2.0 * nt + 1.0;
  const double nt1 = nt + 1.0;

  const double a_p = 1.0 - (e2 / big_t) / (two_nt * (nbar + 1.0));
  const std::complex<double> zc = std::conj(z);
  const std::complex<double> ac = std::conj(alpha);
  const std::complex<double> b_p =
      std::sqrt((nbar + 1.0) * big_t / nt1) * zc +
      std::sqrt(nt1) * r * (2.0 * ac - zc * r / nt1) /
          (two_nt * std::sqrt((nbar + 1.0) * big_t));
  const double c_p =
      ((3.0 * nt + 2.0) / nt1 * std::norm(z) * e2 +
       4.0 * big_t * big_t * nbar * nbar * std::norm(alpha)) /
          two_nt -
      2.0 * r * nt1 / two_nt * (2.0 * (z * ac).real());

  const double norm_m = laguerre(m, -std::norm(z));
  const double prefactor = std::exp(-c_p - 2.0 * std::norm(alpha)) /
                           (kPi * norm_m * two_nt) *
                           ipow((nbar + 1.0) * big_t / nt1, m);
  return prefactor * scaled_laguerre_sum(m, std::norm(b_p), a_p);
}

double positivity_time(double nbar) {
  if (!(nbar >= 0.0) || !std::isfinite(nbar)) {
    throw std::domain_error("positivity_time: nbar must be finite and >= 0");
  }
  return 0.5 * std::log(2.0 * (nbar + 1.0) / (2.0 * nbar + 1.0));
}

}  // namespace wigner
