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

#include "wigner/photon_stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <vector>

#include "wigner/special.hpp"
#include "wigner/states.hpp"

namespace wigner {

namespace {

constexpr double kPi = std::numbers::pi;

// n_cut ceiling shared by every path here: the overlap route leans on the
// number-state recurrence (capped at 64) and nothing downstream is validated
// past it.
constexpr int kMaxNCut = 64;

double ipow(double x, int k) {
  double out = 1.0;
  for (int i = 0; i < k; ++i) out *= x;
  return out;
}

void check_pacs_args(int m, std::complex<double> z, const char* who) {
  if (m < 0 || m > kMaxPhotonAdded) {
    throw std::domain_error(std::string(who) + ": m outside [0, 30]");
  }
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw std::domain_error(std::string(who) + ": z must be finite");
  }
}

/// Exact t = 0 distribution of a photon-added coherent state:
///   p(n) = e^{-|z|^2} |z|^{2(n-m)} n! / (((n-m)!)^2 m! L_m(-|z|^2)),  n >= m.
double pnd_pacs_initial(int m, std::complex<double> z, int n) {
  if (n < m) return 0.0;
  const double x = std::norm(z);
  if (x == 0.0) return n == m ? 1.0 : 0.0;
  const double log_p = -x + (n - m) * std::log(x) + log_factorial(n) -
                       2.0 * log_factorial(n - m) - log_factorial(m) -
                       std::log(laguerre(m, -x));
  return std::exp(log_p);
}

/// S_n(u) = sum_k (-1)^{n+k} C(n,k) u^k (1-A)^{n-k} / k!
///        = (A-1)^n L_n(u / (1-A)).
/// The Laguerre recurrence is the stable route while |1-A| is not small; near
/// A = 1 the binomial form is dominated by its k = n term and safe directly.
double s_poly(int n, double u, double a_factor) {
  const double one_a = 1.0 - a_factor;
  if (std::abs(one_a) >= 0.5) {
    return ipow(a_factor - 1.0, n) * laguerre(n, u / one_a);
  }
  double sum = 0.0;
  double uk = 1.0;  // u^k
  for (int k = 0; k <= n; ++k) {
    const double coeff =
        std::exp(log_factorial(n) - log_factorial(n - k) - 2.0 * log_factorial(k));
    const double sign = ((n + k) % 2 == 0) ? 1.0 : -1.0;
    sum += sign * coeff * uk * ipow(one_a, n - k);
    uk *= u;
  }
  return sum;
}

/// Single-sum branch valid whenever the kernel is the pure-loss one (damping,
/// or a laser channel with g = 0): with omega = T = 1 - e^{-2 kappa t},
///   p(n) = (m!/n!) (1-omega)^n omega^{m-n} e^{-e^{-2 kappa t}|z|^2}
///          / L_m(-|z|^2) sum_l |H_{m-l,n}(i sqrt(omega) z, i sqrt(omega)
///          z*)|^2 / (l! ((m-l)!)^2).
double pnd_pacs_damping(int m, std::complex<double> z, double kappa, double t, int n) {
  const double two_kt = 2.0 * kappa * t;
  const double e2 = std::exp(-two_kt);
  const double omega = -std::expm1(-two_kt);  // T
  if (omega < 1e-14) return pnd_pacs_initial(m, z, n);

  const std::complex<double> i_sq(0.0, std::sqrt(omega));
  const std::complex<double> x = i_sq * z;
  const std::complex<double> y = i_sq * std::conj(z);
  double sum = 0.0;
  for (int l = 0; l <= m; ++l) {
    const double h = std::abs(hermite2(m - l, n, x, y));
    sum += h * h * std::exp(-log_factorial(l) - 2.0 * log_factorial(m - l));
  }
  if (sum <= 0.0) return 0.0;
  // (1-omega)^n = e^{-2 kappa t n}, taken in the exponent so that late times
  // (omega -> 1) never round through zero.
  const double log_pref = log_factorial(m) - log_factorial(n) - two_kt * n +
                          (m - n) * std::log(omega) - e2 * std::norm(z) -
                          std::log(laguerre(m, -std::norm(z)));
  return std::exp(log_pref + std::log(sum));
}

}  // namespace

PndFactors pnd_factors(const ChannelParams& p, int m, std::complex<double> z, int n) {
  check_pacs_args(m, z, "pnd_factors");
  if (n < 0) throw std::domain_error("pnd_factors: n must be >= 0");
  const KernelFactors kf = kernel_factors(p);
  if (kf.A >= 1.0) {
    std::ostringstream os;
    os << "pnd_factors: A = " << kf.A << " >= 1, sigma is not real here "
       << "(use the quadrature path)";
    throw std::domain_error(os.str());
  }
  PndFactors f;
  f.sigma = kf.decay / std::sqrt(1.0 - kf.A * kf.A);
  f.mu = 1.0 + kf.decay * kf.decay / (kf.A + 1.0);
  f.omega = (2.0 - f.mu) / f.mu;
  f.lambda = 2.0 * f.sigma / f.mu;
  const double sign_m = (m % 2 == 0) ? 1.0 : -1.0;
  f.Nfac = 4.0 * ipow(kf.A - 1.0, n) / ipow(kf.A + 1.0, n + 1) * sign_m /
           laguerre(m, -std::norm(z));
  return f;
}

PhotonNumberDistribution pnd_overlap(const std::function<double(PhasePoint)>& w,
                                     int n_cut, const GaussianEnvelope& env, int order) {
  if (n_cut < 0 || n_cut > kMaxNCut) {
    throw std::domain_error("pnd_overlap: n_cut outside [0, 64]");
  }
  const GaussianEnvelope box_env =
      combine(env, GaussianEnvelope::at(0.0, 2.0, 2 * n_cut));
  const QuadratureRule rule =
      rule_for(box_env, order > 0 ? order : auto_order(box_env));

  // Cache the caller's Wigner function on the tensor grid once; each p(n) is
  // then a weighted dot product against the number-state Wigner values.
  const int nn = rule.order;
  const double h = rule.half_width;
  std::vector<double> wv(static_cast<size_t>(nn) * nn);
  std::vector<PhasePoint> pts(static_cast<size_t>(nn) * nn);
  for (int i = 0; i < nn; ++i) {
    const double xr = rule.center.real() + h * rule.nodes[i];
    for (int j = 0; j < nn; ++j) {
      const PhasePoint a(xr, rule.center.imag() + h * rule.nodes[j]);
      pts[i * nn + j] = a;
      wv[i * nn + j] = w(a);
    }
  }

  PhotonNumberDistribution out;
  out.n_cut = n_cut;
  out.probs.resize(n_cut + 1);
  double total = 0.0;
  for (int n = 0; n <= n_cut; ++n) {
    double acc = 0.0;
    for (int i = 0; i < nn; ++i) {
      double row = 0.0;
      for (int j = 0; j < nn; ++j) {
        row += rule.weights[j] * wigner_number(n, pts[i * nn + j]) * wv[i * nn + j];
      }
      acc += rule.weights[i] * row;
    }
    const double pn = 4.0 * kPi * acc * h * h;
    if (pn < -1e-9 || pn > 1.0 + 1e-9) {
      std::ostringstream os;
      os << "pnd_overlap: p(" << n << ") = " << pn
         << " outside [0, 1]; envelope or order is inadequate";
      throw AccuracyError(os.str());
    }
    out.probs[n] = std::clamp(pn, 0.0, 1.0);
    total += pn;
  }
  out.tail_bound = std::max(0.0, 1.0 - total);
  return out;
}

PhotonNumberDistribution pnd_evolved(const std::function<double(PhasePoint)>& w0,
                                     const ChannelParams& p, int n_cut,
                                     const GaussianEnvelope& state_env, int order) {
  if (n_cut < 0 || n_cut > kMaxNCut) {
    throw std::domain_error("pnd_evolved: n_cut outside [0, 64]");
  }
  const KernelFactors kf = kernel_factors(p);
  const double e2 = kf.decay * kf.decay;
  const double ap1 = kf.A + 1.0;

  const GaussianEnvelope box_env =
      combine(state_env, GaussianEnvelope::at(0.0, 2.0 * e2 / ap1, 2 * n_cut));
  const QuadratureRule rule =
      rule_for(box_env, order > 0 ? order : auto_order(box_env));
  const int nn = rule.order;
  const double h = rule.half_width;
  std::vector<double> wv(static_cast<size_t>(nn) * nn);
  std::vector<double> uv(static_cast<size_t>(nn) * nn);
  for (int i = 0; i < nn; ++i) {
    const double xr = rule.center.real() + h * rule.nodes[i];
    for (int j = 0; j < nn; ++j) {
      const PhasePoint b(xr, rule.center.imag() + h * rule.nodes[j]);
      wv[i * nn + j] = w0(b);
      uv[i * nn + j] = 4.0 * e2 * std::norm(b) / ap1;
    }
  }

  PhotonNumberDistribution out;
  out.n_cut = n_cut;
  out.probs.resize(n_cut + 1);
  double total = 0.0;
  for (int n = 0; n <= n_cut; ++n) {
    double acc = 0.0;
    for (int i = 0; i < nn; ++i) {
      double row = 0.0;
      for (int j = 0; j < nn; ++j) {
        const double u = uv[i * nn + j];
        row += rule.weights[j] * std::exp(-0.5 * u) * s_poly(n, u, kf.A) * wv[i * nn + j];
      }
      acc += rule.weights[i] * row;
    }
    const double pn = 4.0 / ipow(ap1, n + 1) * acc * h * h;
    if (pn < -1e-9 || pn > 1.0 + 1e-9) {
      std::ostringstream os;
      os << "pnd_evolved: p(" << n << ") = " << pn
         << " outside [0, 1]; envelope or order is inadequate";
      throw AccuracyError(os.str());
    }
    out.probs[n] = std::clamp(pn, 0.0, 1.0);
    total += pn;
  }
  out.tail_bound = std::max(0.0, 1.0 - total);
  return out;
}

namespace detail {

double pnd_pacs_closed_general(int m, std::complex<double> z, const ChannelParams& p,
                               int n) {
  check_pacs_args(m, z, "pnd_pacs_closed_general");
  if (n < 0 || n > kMaxNCut) {
    throw std::domain_error("pnd_pacs_closed_general: n outside [0, 64]");
  }
  const KernelFactors kf = kernel_factors(p);
  if (kf.T < 1e-14) return pnd_pacs_initial(m, z, n);
  const PndFactors f = pnd_factors(p, m, z, n);  // throws when A >= 1

  // c >= 0: it vanishes identically at g = 0 and is positive for 0 < g < kappa,
  // so every term of the double sum is nonnegative and log-sum-exp is exact.
  const double c = f.omega * (f.lambda * f.sigma - 1.0) / (f.lambda * f.lambda);
  const std::complex<double> i_sq(0.0, std::sqrt(f.omega));
  const std::complex<double> x = i_sq * z;
  const std::complex<double> y = i_sq * std::conj(z);

  double max_log = -std::numeric_limits<double>::infinity();
  double scaled_sum = 0.0;
  double ck = 1.0;  // c^k, kept linear so c = 0 never meets a log
  for (int k = 0; k <= n; ++k, ck *= c) {
    if (ck == 0.0 && k > 0) break;
    for (int l = 0; l <= m; ++l) {
      const double habs = std::abs(hermite2(m - l, n - k, x, y));
      if (habs == 0.0) continue;
      const double lg = log_factorial(m) + log_factorial(n) - log_factorial(l) -
                        log_factorial(k) - 2.0 * log_factorial(m - l) -
                        2.0 * log_factorial(n - k) + std::log(ck) +
                        2.0 * std::log(habs);
      if (lg <= max_log) {
        scaled_sum += std::exp(lg - max_log);
      } else {
        scaled_sum = scaled_sum * std::exp(max_log - lg) + 1.0;
        max_log = lg;
      }
    }
  }
  if (scaled_sum <= 0.0) return 0.0;

  const double log_pref = std::log(4.0) + n * std::log1p(-kf.A) -
                          (n + 1) * std::log1p(kf.A) -
                          std::log(laguerre(m, -std::norm(z))) +
                          2.0 * n * std::log(f.lambda) +
                          (2.0 - 2.0 * f.mu) / f.mu * std::norm(z) -
                          std::log(2.0 * f.mu) + (m - n) * std::log(f.omega);
  return std::exp(log_pref + max_log + std::log(scaled_sum));
}

}  // namespace detail

double pnd_pacs_closed(int m, std::complex<double> z, const ChannelParams& p, int n,
                       bool* used_fallback) {
  check_pacs_args(m, z, "pnd_pacs_closed");
  if (n < 0 || n > kMaxNCut) {
    throw std::domain_error("pnd_pacs_closed: n outside [0, 64]");
  }
  validate(p);
  if (p.kind == ChannelKind::Thermal) {
    throw std::domain_error(
        "pnd_pacs_closed: closed photon statistics cover the damping and laser "
        "channels only; use pnd_evolved for a thermal bath");
  }
  if (used_fallback != nullptr) *used_fallback = false;

  if (p.kind == ChannelKind::Damping || p.g == 0.0) {
    return pnd_pacs_damping(m, z, p.kappa, p.t, n);
  }
  const KernelFactors kf = kernel_factors(p);
  if (kf.T < 1e-14) return pnd_pacs_initial(m, z, n);
  // The closed representation has a removable 1/sqrt(1 - A^2) degeneracy; the
  // value stays finite but cancellation destroys it well before A reaches 1,
  // so the quadrature route takes over slightly early.
  if (kf.A < 1.0 - 1e-6) {
    return detail::pnd_pacs_closed_general(m, z, p, n);
  }
  if (used_fallback != nullptr) *used_fallback = true;
  PacsState ps{m, z};
  const StateSpec spec{ps};
  const auto pnd = pnd_evolved(
      [&](PhasePoint beta) { return wigner_pacs(m, z, beta); }, p, n,
      state_envelope(spec));
  return pnd.probs[n];
}

int default_n_cut(double mean) {
  if (!(mean >= 0.0) || !std::isfinite(mean)) {
    throw std::domain_error("default_n_cut: mean must be finite and >= 0");
  }
  const int n = static_cast<int>(std::ceil(mean + 8.0 * std::sqrt(mean + 1.0)));
  return std::min(kMaxNCut, std::max(16, n));
}

double mean_photon(const PhotonNumberDistribution& pnd) {
  if (!(pnd.tail_bound < 1e-6)) {
    std::ostringstream os;
    os << "mean_photon: tail bound " << pnd.tail_bound
       << " >= 1e-6; the mean over the kept block is untrustworthy";
    throw AccuracyError(os.str());
  }
  double mean = 0.0;
  for (size_t n = 0; n < pnd.probs.size(); ++n) mean += double(n) * pnd.probs[n];
  return mean;
}

}  // namespace wigner
