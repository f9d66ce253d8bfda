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

#include "wigner/types.hpp"

#include <sstream>

#include "wigner/special.hpp"

namespace wigner {

namespace {

std::string complex_str(std::complex<double> z) {
  std::ostringstream os;
  os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
  return os.str();
}

}  // namespace

void validate(const StateSpec& spec) {
  std::visit(
      [](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, NumberState>) {
          if (s.n < 0 || s.n > kMaxNumber) {
            throw std::domain_error("number state n outside [0, 64]");
          }
        } else if constexpr (std::is_same_v<T, CoherentState>) {
          if (!std::isfinite(s.z.real()) || !std::isfinite(s.z.imag())) {
            throw std::domain_error("coherent amplitude must be finite");
          }
        } else if constexpr (std::is_same_v<T, PacsState>) {
          if (s.m < 0 || s.m > kMaxPhotonAdded) {
            throw std::domain_error("photon-added order m outside [0, 30]");
          }
          if (!std::isfinite(s.z.real()) || !std::isfinite(s.z.imag())) {
            throw std::domain_error("coherent amplitude must be finite");
          }
        } else if constexpr (std::is_same_v<T, ThermalState>) {
          if (!(s.nbar >= 0.0) || !std::isfinite(s.nbar)) {
            throw std::domain_error("thermal occupation must be finite and >= 0");
          }
        }
      },
      spec);
}

std::string describe(const StateSpec& spec) {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        std::ostringstream os;
        if constexpr (std::is_same_v<T, NumberState>) {
          os << "number(n=" << s.n << ")";
        } else if constexpr (std::is_same_v<T, CoherentState>) {
          os << "coherent(z=" << complex_str(s.z) << ")";
        } else if constexpr (std::is_same_v<T, PacsState>) {
          os << "pacs(m=" << s.m << ",z=" << complex_str(s.z) << ")";
        } else if constexpr (std::is_same_v<T, ThermalState>) {
          os << "thermal(nbar=" << s.nbar << ")";
        }
        return os.str();
      },
      spec);
}

double initial_mean_photon(const StateSpec& spec) {
  return std::visit(
      [](const auto& s) -> double {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, NumberState>) {
          return static_cast<double>(s.n);
        } else if constexpr (std::is_same_v<T, CoherentState>) {
          return std::norm(s.z);
        } else if constexpr (std::is_same_v<T, PacsState>) {
          // <a+a> = (m+1) L_{m+1}(-|z|^2) / L_m(-|z|^2) - 1, from
          // <z| a^{m+1} a+^{m+1} |z> = (m+1)! L_{m+1}(-|z|^2) and aa+ = a+a + 1.
          const double x = -std::norm(s.z);
          return (s.m + 1) * laguerre(s.m + 1, x) / laguerre(s.m, x) - 1.0;
        } else {
          return s.nbar;
        }
      },
      spec);
}

void validate(const ChannelParams& p) {
  if (!(p.kappa > 0.0) || !std::isfinite(p.kappa)) {
    throw std::domain_error("channel: kappa must be finite and > 0");
  }
  if (!(p.t >= 0.0) || !std::isfinite(p.t)) {
    throw std::domain_error("channel: t must be finite and >= 0");
  }
  switch (p.kind) {
    case ChannelKind::Damping:
      if (p.g != 0.0 || p.nbar != 0.0) {
        throw std::domain_error("damping channel requires g = 0 and nbar = 0");
      }
      break;
    case ChannelKind::Laser:
      if (!(p.g >= 0.0) || !std::isfinite(p.g)) {
        throw std::domain_error("laser channel: g must be finite and >= 0");
      }
      if (p.nbar != 0.0) {
        throw std::domain_error("laser channel does not take nbar");
      }
      break;
    case ChannelKind::Thermal:
      if (!(p.nbar >= 0.0) || !std::isfinite(p.nbar)) {
        throw std::domain_error("thermal channel: nbar must be finite and >= 0");
      }
      if (p.g != 0.0) {
        throw std::domain_error("thermal channel does not take g (gain is kappa*nbar)");
      }
      break;
  }
}

double loss_rate(const ChannelParams& p) {
  return p.kind == ChannelKind::Thermal ? p.kappa * (p.nbar + 1.0) : p.kappa;
}

double gain_rate(const ChannelParams& p) {
  switch (p.kind) {
    case ChannelKind::Damping:
      return 0.0;
    case ChannelKind::Laser:
      return p.g;
    case ChannelKind::Thermal:
      return p.kappa * p.nbar;
  }
  return 0.0;
}

double net_decay_rate(const ChannelParams& p) {
  // Not loss_rate - gain_rate: for the thermal channel that difference is
  // kappa only up to rounding, and the kernel exponents use kappa itself.
  return p.kind == ChannelKind::Laser ? p.kappa - p.g : p.kappa;
}

std::string describe(const ChannelParams& p) {
  std::ostringstream os;
  switch (p.kind) {
    case ChannelKind::Damping:
      os << "damping(kappa=" << p.kappa;
      break;
    case ChannelKind::Laser:
      os << "laser(kappa=" << p.kappa << ",g=" << p.g;
      break;
    case ChannelKind::Thermal:
      os << "thermal(kappa=" << p.kappa << ",nbar=" << p.nbar;
      break;
  }
  os << ",t=" << p.t << ")";
  return os.str();
}

}  // namespace wigner
