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

#include "wigner/fock_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "wigner/evolution.hpp"
#include "wigner/special.hpp"
#include "wigner/states.hpp"

namespace wigner {

namespace {

constexpr double kPi = std::numbers::pi;

// Largest Fock index the dense oracle will agree to carry.  See oracle_n_max.
constexpr int kHardCap = 256;

// Lindblad right-hand side on a raw matrix; `loss` and `gain` are the L, G
// prefactors.  Column-major traversal to match Eigen's default storage.
Eigen::MatrixXcd rhs(const Eigen::MatrixXcd& r, double loss, double gain) {
  const int dim = static_cast<int>(r.rows());
  Eigen::MatrixXcd out(dim, dim);
  for (int k = 0; k < dim; ++k) {
    for (int j = 0; j < dim; ++j) {
      std::complex<double> acc = 0.0;
      if (loss != 0.0) {
        if (j + 1 < dim && k + 1 < dim) {
          acc += 2.0 * loss * std::sqrt(double(j + 1) * double(k + 1)) * r(j + 1, k + 1);
        }
        acc -= loss * double(j + k) * r(j, k);
      }
      if (gain != 0.0) {
        if (j >= 1 && k >= 1) {
          acc += 2.0 * gain * std::sqrt(double(j) * double(k)) * r(j - 1, k - 1);
        }
        acc -= gain * double(j + k + 2) * r(j, k);
      }
      out(j, k) = acc;
    }
  }
  return out;
}

}  // namespace

double FockDensityMatrix::hermiticity_error() const {
  return (rho - rho.adjoint()).cwiseAbs().maxCoeff();
}

double FockDensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

Eigen::MatrixXcd lindblad_rhs(const FockDensityMatrix& rho, const ChannelParams& p) {
  validate(p);
  return rhs(rho.rho, loss_rate(p), gain_rate(p));
}

int default_steps(const ChannelParams& p) {
  validate(p);
  if (p.t == 0.0) return 0;
  const double max_rate = std::max({loss_rate(p), gain_rate(p), p.kappa});
  const double dt = std::min(0.01 / max_rate, p.t / 100.0);
  return std::max(100, static_cast<int>(std::ceil(p.t / dt)));
}

FockDensityMatrix evolve_density(const FockDensityMatrix& rho0, const ChannelParams& p,
                                 int steps) {
  validate(p);
  if (steps < 0) throw std::domain_error("evolve_density: steps must be >= 0");
  FockDensityMatrix out{rho0.rho};
  if (p.t == 0.0 || steps == 0) {
    if (p.t != 0.0) throw std::domain_error("evolve_density: t > 0 needs steps > 0");
    return out;
  }
  const double loss = loss_rate(p);
  const double gain = gain_rate(p);
  const double dt = p.t / steps;
  const double trace0 = out.trace();
  Eigen::MatrixXcd& r = out.rho;
  for (int s = 0; s < steps; ++s) {
    const Eigen::MatrixXcd k1 = rhs(r, loss, gain);
    const Eigen::MatrixXcd k2 = rhs(r + (0.5 * dt) * k1, loss, gain);
    const Eigen::MatrixXcd k3 = rhs(r + (0.5 * dt) * k2, loss, gain);
    const Eigen::MatrixXcd k4 = rhs(r + dt * k3, loss, gain);
    r += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    r = (0.5 * (r + r.adjoint())).eval();
  }
  const double drift = std::abs(out.trace() - trace0);
  if (drift > 1e-5) {
    std::ostringstream os;
    os << "evolve_density: trace drifted by " << drift << " over " << steps
       << " steps at dim = " << out.dim()
       << "; the basis is too small or the step too coarse for this channel";
    throw TruncationError(os.str());
  }
  return out;
}

int planned_steps(const ChannelParams& p, int dim) {
  int steps = default_steps(p);
  if (p.t > 0.0) {
    // Explicit RK4 needs dt * |lambda_max| inside its stability region.  The
    // generator's fastest coherence decays at ~2 (L + G) (dim - 1), so the
    // rate-based default above can leave the region once dim grows past ~125.
    // Keep dt * 2 (L + G) dim <= 2.5 (stability edge is ~2.79).
    const double spectral = 2.0 * (loss_rate(p) + gain_rate(p)) * dim;
    const int stable = static_cast<int>(std::ceil(p.t * spectral / 2.5));
    steps = std::max(steps, stable);
  }
  return steps;
}

FockDensityMatrix evolve_density(const FockDensityMatrix& rho0, const ChannelParams& p) {
  return evolve_density(rho0, p, planned_steps(p, rho0.dim()));
}

double wigner_from_density(const FockDensityMatrix& rho, PhasePoint alpha) {
  const int dim = rho.dim();
  if (dim <= 0) throw std::domain_error("wigner_from_density: empty matrix");
  const std::complex<double> beta = 2.0 * alpha;
  const double x = std::norm(beta);

  if (x == 0.0) {
    double parity = 0.0;
    for (int n = 0; n < dim; ++n) {
      parity += (n % 2 == 0 ? 1.0 : -1.0) * rho.rho(n, n).real();
    }
    return parity / kPi;
  }
  // Every scaled matrix element below carries e^{-x/2}; once x/2 passes the
  // exponent range the whole kept block contributes < 1e-150 and zero is the
  // numerically correct answer.
  if (0.5 * x >= 700.0) return 0.0;

  // table[k][j] = e^{-x/2} L_j^{(k)}(x) for j + k < dim.  Folding the
  // Gaussian into the recurrence seed keeps every intermediate representable.
  std::vector<std::vector<double>> table(dim);
  const double seed = std::exp(-0.5 * x);
  for (int k = 0; k < dim; ++k) {
    const int count = dim - k;
    table[k].resize(count);
    table[k][0] = seed;
    if (count > 1) table[k][1] = (1.0 + k - x) * seed;
    for (int j = 1; j + 1 < count; ++j) {
      table[k][j + 1] =
          ((2.0 * j + 1.0 + k - x) * table[k][j] - (j + k) * table[k][j - 1]) / (j + 1.0);
    }
  }

  // Tr[rho D(beta) (-1)^n] = sum_{m,n} rho(n, m) (-1)^n <m|D(beta)|n>.
  const double log_mag = std::log(std::abs(beta));
  const double phase_up = std::arg(beta);          // for m > n: beta^{m-n}
  const double phase_dn = std::arg(-std::conj(beta));  // for m < n: (-conj beta)^{n-m}
  std::complex<double> trace = 0.0;
  for (int m = 0; m < dim; ++m) {
    for (int n = 0; n < dim; ++n) {
      const int k = std::abs(m - n);
      const int lo = std::min(m, n);
      double log_pref = k * log_mag;
      log_pref += 0.5 * (log_factorial(lo) - log_factorial(lo + k));
      const double mag = std::exp(log_pref) * table[k][lo];
      const std::complex<double> elem =
          std::polar(mag, k * (m >= n ? phase_up : phase_dn));
      trace += rho.rho(n, m) * ((n % 2 == 0) ? elem : -elem);
    }
  }
  if (std::abs(trace.imag()) > 1e-10) {
    std::ostringstream os;
    os << "wigner_from_density: displaced-parity trace has imaginary residue "
       << trace.imag() << " (non-Hermitian input?)";
    throw AccuracyError(os.str());
  }
  return trace.real() / kPi;
}

double displacement_tail_estimate(int dim, PhasePoint alpha) {
  if (dim <= 0) throw std::domain_error("displacement_tail_estimate: dim must be > 0");
  const double lambda = 4.0 * std::norm(alpha);  // Poisson mean of D(2 alpha)|0>
  if (lambda == 0.0) return 0.0;
  const double n = static_cast<double>(dim);
  if (n <= lambda) return 1.0;
  // Chernoff: P(X >= n) <= exp(-lambda) (e lambda / n)^n for n > lambda.
  return std::min(1.0, std::exp(-lambda + n * (1.0 + std::log(lambda / n))));
}

PhotonNumberDistribution pnd_from_density(const FockDensityMatrix& rho) {
  PhotonNumberDistribution out;
  const int dim = rho.dim();
  out.n_cut = dim - 1;
  out.probs.resize(dim);
  for (int n = 0; n < dim; ++n) {
    const double pn = rho.rho(n, n).real();
    if (pn < -1e-9 || pn > 1.0 + 1e-9) {
      throw AccuracyError("pnd_from_density: p(" + std::to_string(n) +
                          ") = " + std::to_string(pn) + " outside [0, 1]");
    }
    out.probs[n] = std::clamp(pn, 0.0, 1.0);
  }
  out.tail_bound = std::max(0.0, 1.0 - rho.trace());
  return out;
}

int oracle_n_max(const StateSpec& spec, const ChannelParams& p) {
  validate(spec);
  validate(p);
  const double mu0 = initial_mean_photon(spec);
  const KernelFactors kf = kernel_factors(p);
  const double e2 = kf.decay * kf.decay;
  const double mu_t = mu0 * e2 + 0.5 * (kf.A + e2 - 1.0);
  const double mu_max = std::max(mu0, mu_t);

  int n = static_cast<int>(std::ceil(mu_max + 8.0 * std::sqrt(mu_max + 1.0)));
  n = std::max(n, default_n_max(spec) + 8);
  if (p.kind == ChannelKind::Thermal && p.nbar > 1e-12) {
    // The bath imprints a geometric tail; Poissonian margins undershoot it.
    const double per_level = std::log1p(1.0 / p.nbar);
    n = std::max(n, static_cast<int>(std::ceil(10.0 * std::log(10.0) / per_level)) + 8);
  }
  if (n > kHardCap) {
    std::ostringstream os;
    os << "oracle_n_max: state/channel needs N_max = " << n << " > " << kHardCap
       << "; refusing (dense oracle cannot follow this amplification honestly)";
    throw TruncationError(os.str());
  }
  return n;
}

}  // namespace wigner
