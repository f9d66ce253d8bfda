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

#include "wigner/states.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "wigner/special.hpp"

namespace wigner {

namespace {

constexpr double kPi = std::numbers::pi;

[[noreturn]] void throw_tail(const char* what, double tail, int n_max) {
  std::ostringstream os;
  os << what << ": truncation at n_max = " << n_max << " leaves tail mass "
     << tail << " > 1e-10";
  throw TruncationError(os.str());
}

}  // namespace

double wigner_number(int n, PhasePoint alpha) {
  if (n < 0 || n > kMaxNumber) {
    throw std::domain_error("wigner_number: n outside [0, 64]");
  }
  const double r2 = std::norm(alpha);
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  return sign / kPi * std::exp(-2.0 * r2) * laguerre(n, 4.0 * r2);
}

double wigner_coherent(std::complex<double> z, PhasePoint alpha) {
  return std::exp(-2.0 * std::norm(alpha - z)) / kPi;
}

double wigner_pacs(int m, std::complex<double> z, PhasePoint alpha) {
  if (m < 0 || m > kMaxPhotonAdded) {
    throw std::domain_error("wigner_pacs: m outside [0, 30]");
  }
  const double sign = (m % 2 == 0) ? 1.0 : -1.0;
  const double norm_m = laguerre(m, -std::norm(z));  // L_m(-|z|^2) >= 1
  return sign * std::exp(-2.0 * std::norm(alpha - z)) *
         laguerre(m, std::norm(2.0 * alpha - z)) / (kPi * norm_m);
}

double wigner_thermal(double nbar, PhasePoint alpha) {
  if (!(nbar >= 0.0) || !std::isfinite(nbar)) {
    throw std::domain_error("wigner_thermal: nbar must be finite and >= 0");
  }
  const double width = 2.0 * nbar + 1.0;
  return std::exp(-2.0 * std::norm(alpha) / width) / (kPi * width);
}

double wigner_initial(const StateSpec& spec, PhasePoint alpha) {
  return std::visit(
      [alpha](const auto& s) -> double {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, NumberState>) {
          return wigner_number(s.n, alpha);
        } else if constexpr (std::is_same_v<T, CoherentState>) {
          return wigner_coherent(s.z, alpha);
        } else if constexpr (std::is_same_v<T, PacsState>) {
          return wigner_pacs(s.m, s.z, alpha);
        } else {
          return wigner_thermal(s.nbar, alpha);
        }
      },
      spec);
}

GaussianEnvelope state_envelope(const StateSpec& spec) {
  return std::visit(
      [](const auto& s) -> GaussianEnvelope {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, NumberState>) {
          return GaussianEnvelope::at(0.0, 2.0, 2 * s.n);
        } else if constexpr (std::is_same_v<T, CoherentState>) {
          return GaussianEnvelope::at(s.z, 2.0, 0);
        } else if constexpr (std::is_same_v<T, PacsState>) {
          return GaussianEnvelope::at(s.z, 2.0, 2 * s.m);
        } else {
          return GaussianEnvelope::at(0.0, 2.0 / (2.0 * s.nbar + 1.0), 0);
        }
      },
      spec);
}

int default_n_max(const StateSpec& spec) {
  validate(spec);
  return std::visit(
      [](const auto& s) -> int {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, ThermalState>) {
          // Geometric tail (nbar/(nbar+1))^{N+1} <= 1e-10.
          if (s.nbar <= 1e-12) return 16;
          const double per_level = std::log1p(1.0 / s.nbar);
          const int n = static_cast<int>(std::ceil(10.0 * std::log(10.0) / per_level));
          return std::max(16, n);
        } else {
          double mean = 0.0;
          if constexpr (std::is_same_v<T, NumberState>) {
            mean = static_cast<double>(s.n);
          } else if constexpr (std::is_same_v<T, CoherentState>) {
            mean = std::norm(s.z);
          } else {
            mean = std::norm(s.z) + s.m;
          }
          const int n = static_cast<int>(std::ceil(mean + 8.0 * std::sqrt(mean + 1.0)));
          return std::max(16, n);
        }
      },
      spec);
}

FockDensityMatrix fock_density(const StateSpec& spec, int n_max) {
  validate(spec);
  if (n_max < 0) throw std::domain_error("fock_density: n_max must be >= 0");
  const int dim = n_max + 1;
  FockDensityMatrix out;
  out.rho = Eigen::MatrixXcd::Zero(dim, dim);

  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, NumberState>) {
          if (s.n > n_max) throw_tail("fock_density(number)", 1.0, n_max);
          out.rho(s.n, s.n) = 1.0;
        } else if constexpr (std::is_same_v<T, CoherentState>) {
          // c_k = e^{-|z|^2/2} z^k / sqrt(k!), via logs for stability.
          Eigen::VectorXcd c(dim);
          const double log_mag = std::log(std::max(std::abs(s.z), 1e-300));
          const double phase = std::arg(s.z);
          for (int k = 0; k <= n_max; ++k) {
            const double lm = -0.5 * std::norm(s.z) + k * log_mag - 0.5 * log_factorial(k);
            c(k) = s.z == 0.0 && k > 0
                       ? 0.0
                       : std::polar(std::exp(lm), k * phase);
          }
          const double kept = c.squaredNorm();
          if (1.0 - kept > 1e-10) throw_tail("fock_density(coherent)", 1.0 - kept, n_max);
          c /= std::sqrt(kept);
          out.rho = c * c.adjoint();
        } else if constexpr (std::is_same_v<T, PacsState>) {
          // a+^m |z> = e^{-|z|^2/2} sum_k z^k sqrt((k+m)!) / k! |k+m>,
          // squared norm m! L_m(-|z|^2).
          if (s.m > n_max) throw_tail("fock_density(pacs)", 1.0, n_max);
          Eigen::VectorXcd c = Eigen::VectorXcd::Zero(dim);
          const double log_mag = std::log(std::max(std::abs(s.z), 1e-300));
          const double phase = std::arg(s.z);
          for (int k = 0; k + s.m <= n_max; ++k) {
            const double lm = -0.5 * std::norm(s.z) + k * log_mag +
                              0.5 * log_factorial(k + s.m) - log_factorial(k);
            c(k + s.m) = s.z == 0.0 && k > 0
                             ? 0.0
                             : std::polar(std::exp(lm), k * phase);
          }
          const double full = std::exp(log_factorial(s.m)) * laguerre(s.m, -std::norm(s.z));
          const double kept = c.squaredNorm();
          if ((full - kept) / full > 1e-10) {
            throw_tail("fock_density(pacs)", (full - kept) / full, n_max);
          }
          c /= std::sqrt(kept);
          out.rho = c * c.adjoint();
        } else {
          // Geometric diagonal p_n = nbar^n / (nbar+1)^{n+1}.
          const double ratio = s.nbar / (s.nbar + 1.0);
          const double tail = std::pow(ratio, n_max + 1);
          if (tail > 1e-10) throw_tail("fock_density(thermal)", tail, n_max);
          double p = 1.0 / (s.nbar + 1.0);
          double sum = 0.0;
          for (int n = 0; n <= n_max; ++n, p *= ratio) {
            out.rho(n, n) = p;
            sum += p;
          }
          out.rho /= sum;
        }
      },
      spec);
  return out;
}

FockDensityMatrix fock_density(const StateSpec& spec) {
  return fock_density(spec, default_n_max(spec));
}

}  // namespace wigner
