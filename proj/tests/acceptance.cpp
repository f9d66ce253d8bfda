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

// Acceptance gate: one pass/fail line per criterion, with the measured
// quantities and wall time printed for the record.  Exit code 0 only when
// every criterion passes.  Tolerances and budgets are pinned here on
// purpose -- loosening them is a library regression, not a test fix.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include <nlohmann/json.hpp>

#include "wigner/evolution.hpp"
#include "wigner/fock_oracle.hpp"
#include "wigner/parallel.hpp"
#include "wigner/photon_stats.hpp"
#include "wigner/quadrature.hpp"
#include "wigner/special.hpp"
#include "wigner/states.hpp"
#include "wigner/types.hpp"

using namespace wigner;
using std::complex;
using json = nlohmann::json;

namespace {

constexpr double kPi = 3.14159265358979323846;
// 1/pi frozen independently of the library's own constants.
constexpr double kInvPi = 0.31830988618379067154;

struct Outcome {
  bool pass = false;
  std::string detail;
};

ChannelParams damping(double kappa, double t) {
  return {ChannelKind::Damping, kappa, 0.0, 0.0, t};
}
ChannelParams laser(double kappa, double g, double t) {
  return {ChannelKind::Laser, kappa, g, 0.0, t};
}
ChannelParams thermal(double kappa, double nbar, double t) {
  return {ChannelKind::Thermal, kappa, 0.0, nbar, t};
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

/// 5x5 probe grid on [-2,2]^2.
std::vector<PhasePoint> probe25() {
  std::vector<PhasePoint> pts;
  for (int j = 0; j < 5; ++j) {
    for (int i = 0; i < 5; ++i) {
      pts.push_back({-2.0 + i, -2.0 + j});
    }
  }
  return pts;
}

double grid_min_41(const std::function<double(PhasePoint)>& w) {
  std::vector<double> vals(41 * 41);
  parallel_for(41 * 41, [&](int idx) {
    const PhasePoint a{-3.0 + 6.0 * (idx % 41) / 40.0, -3.0 + 6.0 * (idx / 41) / 40.0};
    vals[idx] = w(a);
  });
  double mn = vals[0];
  for (double v : vals) mn = std::min(mn, v);
  return mn;
}

// ---------------------------------------------------------------------------
// Criterion 1: half normalization.  Every supported state kind integrates to
// 1/2 (tolerance 1e-6) with the order-64 rule on the automatically chosen
// box, and the vacuum Wigner function peaks at exactly 1/pi (1e-12).
// ---------------------------------------------------------------------------
Outcome criterion1() {
  const std::vector<StateSpec> states = {NumberState{3}, CoherentState{{1.2, 1.6}},
                                         PacsState{2, {1.0, 0.0}}, ThermalState{1.0}};
  double worst = 0.0;
  for (const auto& spec : states) {
    const auto rule = rule_for(state_envelope(spec), 64);
    const double mass =
        integrate_2d([&](PhasePoint a) { return wigner_initial(spec, a); }, rule).real();
    worst = std::max(worst, std::abs(mass - 0.5));
  }
  const double vac_err = std::abs(wigner_number(0, {0.0, 0.0}) - kInvPi);
  Outcome o;
  o.pass = worst <= 1e-6 && vac_err <= 1e-12;
  o.detail = "max |int W - 1/2| = " + fmt(worst) +
             ", |W_vac(0) - 1/pi| = " + fmt(vac_err);
  return o;
}

// ---------------------------------------------------------------------------
// Criterion 2: the closed damping-channel evolution of photon-added coherent
// states matches the convolution quadrature to 1e-8 on a 5x5 grid over
// [-2,2]^2 for m in {1,2,3}, z = 1, kappa t in {0.1, ln2/2, 1, 3}.
// ---------------------------------------------------------------------------
Outcome criterion2() {
  const auto pts = probe25();
  const complex<double> z{1.0, 0.0};
  double worst = 0.0;
  for (int m : {1, 2, 3}) {
    for (double kt : {0.1, std::log(2.0) / 2.0, 1.0, 3.0}) {
      const StateSpec spec = PacsState{m, z};
      std::vector<double> devs(pts.size());
      parallel_for(static_cast<int>(pts.size()), [&](int i) {
        devs[i] = std::abs(evolve_pacs_damping(m, z, 1.0, kt, pts[i]) -
                           evolve_state(spec, damping(1.0, kt), pts[i]));
      });
      for (double d : devs) worst = std::max(worst, d);
    }
  }
  Outcome o;
  o.pass = worst <= 1e-8;
  o.detail = "max |closed - quadrature| = " + fmt(worst) + " (tol 1e-8)";
  return o;
}

// ---------------------------------------------------------------------------
// Criterion 3: parameter reductions.  The gain-free laser channel reproduces
// pure damping to 1e-10, and the zero-occupation thermal closed form reduces
// to the damping closed form to 1e-8, across 20 random parameter tuples.
// ---------------------------------------------------------------------------
Outcome criterion3() {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> m_dist(0, 3);
  std::uniform_real_distribution<double> mag(0.0, 1.5);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * kPi);
  std::uniform_real_distribution<double> kt_dist(0.05, 2.0);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);

  double worst_laser = 0.0, worst_thermal = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const int m = m_dist(rng);
    const complex<double> z = std::polar(mag(rng), phase(rng));
    const double kt = kt_dist(rng);
    const PhasePoint a{coord(rng), coord(rng)};
    const StateSpec spec = PacsState{m, z};
    const double ref = evolve_pacs_damping(m, z, 1.0, kt, a);
    worst_laser = std::max(
        worst_laser, std::abs(evolve_state(spec, laser(1.0, 0.0, kt), a) - ref));
    worst_thermal = std::max(
        worst_thermal, std::abs(evolve_pacs_thermal(m, z, 1.0, 0.0, kt, a) - ref));
  }
  Outcome o;
  o.pass = worst_laser <= 1e-10 && worst_thermal <= 1e-8;
  o.detail = "laser(g=0) dev = " + fmt(worst_laser) +
             " (tol 1e-10), thermal(nbar=0) dev = " + fmt(worst_thermal) +
             " (tol 1e-8)";
  return o;
}

// ---------------------------------------------------------------------------
// Criterion 4: positivity threshold.  For m in {1,2}, bath occupations
// {0, 0.5, 1}, the evolved Wigner minimum over a 41x41 grid on [-3,3]^2 is
// >= -1e-9 at t = t_c and t = 1.2 t_c; it is < -1e-3 at t = 0.5 t_c for
// (m=1, nbar=0); and t_c(0) matches its closed expression to 1e-9.
// ---------------------------------------------------------------------------
Outcome criterion4() {
  const complex<double> z{1.0, 0.0};
  double worst_min = 0.0;  // most negative minimum seen at/after t_c
  for (int m : {1, 2}) {
    for (double nbar : {0.0, 0.5, 1.0}) {
      const double tc = positivity_time(nbar);
      for (double factor : {1.0, 1.2}) {
        const double t = factor * tc;
        const StateSpec spec = PacsState{m, z};
        auto w = [&](PhasePoint a) {
          return nbar == 0.0 ? evolve_pacs_damping(m, z, 1.0, t, a)
                             : evolve_state(spec, thermal(1.0, nbar, t), a);
        };
        worst_min = std::min(worst_min, grid_min_41(w));
      }
    }
  }
  const double tc0 = positivity_time(0.0);
  const double before_min = grid_min_41([&](PhasePoint a) {
    return evolve_pacs_damping(1, z, 1.0, 0.5 * tc0, a);
  });
  const double tc_err = std::abs(tc0 - 0.34657359027997264);

  Outcome o;
  o.pass = worst_min >= -1e-9 && before_min < -1e-3 && tc_err <= 1e-9;
  o.detail = "min at/after t_c = " + fmt(worst_min) +
             " (>= -1e-9), min at 0.5 t_c = " + fmt(before_min) +
             " (< -1e-3), |t_c(0) - ln2/2| = " + fmt(tc_err);
  return o;
}

// ---------------------------------------------------------------------------
// Criterion 5: oracle equivalence.  Brute-force Lindblad integration plus
// displaced-parity readout agrees with the kernel methods to 1e-4 on the
// Wigner grid and to 1e-5 on photon-number diagonals (n <= 8), for four
// states crossed with damping and thermal channels at two times each.
// ---------------------------------------------------------------------------
Outcome criterion5() {
  const std::vector<StateSpec> states = {NumberState{1}, CoherentState{{1.0, 0.0}},
                                         PacsState{1, {1.0, 0.0}},
                                         PacsState{2, {1.0, 0.0}}};
  std::vector<ChannelParams> channels;
  for (double t : {0.2, 1.0}) channels.push_back(damping(1.0, t));
  for (double t : {0.2, 1.0}) channels.push_back(thermal(1.0, 0.5, t));

  const auto pts = probe25();
  double worst_w = 0.0, worst_p = 0.0;
  for (const auto& spec : states) {
    for (const auto& p : channels) {
      const int n_max = oracle_n_max(spec, p);
      const auto rho = evolve_density(fock_density(spec, n_max), p);

      std::vector<double> devs(pts.size());
      parallel_for(static_cast<int>(pts.size()), [&](int i) {
        devs[i] = std::abs(wigner_from_density(rho, pts[i]) -
                           evolve_state(spec, p, pts[i]));
      });
      for (double d : devs) worst_w = std::max(worst_w, d);

      const auto diag = pnd_from_density(rho);
      const auto quad = pnd_evolved(
          [&spec](PhasePoint b) { return wigner_initial(spec, b); }, p, 9,
          state_envelope(spec));
      for (int n = 0; n <= 8; ++n) {
        worst_p = std::max(worst_p, std::abs(diag.probs[n] - quad.probs[n]));
      }
    }
  }
  Outcome o;
  o.pass = worst_w <= 1e-4 && worst_p <= 1e-5;
  o.detail = "Wigner dev = " + fmt(worst_w) + " (tol 1e-4), pnd dev = " +
             fmt(worst_p) + " (tol 1e-5)";
  return o;
}

// ---------------------------------------------------------------------------
// Criterion 6: closed photon statistics.  For m in {1,2}, z = 1 in the
// damping channel at kappa t in {0.3, 1}: the closed p(n) matches quadrature
// and the oracle to 1e-5 for n <= 8, sums to 1 within 1e-6, and the evolved
// |1> mean photon number equals e^{-2 kappa t} within 1e-5.
// ---------------------------------------------------------------------------
Outcome criterion6() {
  const complex<double> z{1.0, 0.0};
  double worst_dev = 0.0, worst_sum = 0.0, worst_mean = 0.0;
  for (int m : {1, 2}) {
    for (double kt : {0.3, 1.0}) {
      const auto p = damping(1.0, kt);
      const StateSpec spec = PacsState{m, z};
      const auto quad = pnd_evolved(
          [&spec](PhasePoint b) { return wigner_initial(spec, b); }, p, 9,
          state_envelope(spec));
      const int n_max = oracle_n_max(spec, p);
      const auto diag = pnd_from_density(evolve_density(fock_density(spec, n_max), p));
      for (int n = 0; n <= 8; ++n) {
        const double c = pnd_pacs_closed(m, z, p, n);
        worst_dev = std::max(worst_dev, std::abs(c - quad.probs[n]));
        worst_dev = std::max(worst_dev, std::abs(c - diag.probs[n]));
      }
      double sum = 0.0;
      for (int n = 0; n < 40; ++n) sum += pnd_pacs_closed(m, z, p, n);
      worst_sum = std::max(worst_sum, std::abs(sum - 1.0));
    }
  }
  for (double kt : {0.3, 1.0}) {
    const auto pnd = pnd_evolved(
        [](PhasePoint b) { return wigner_number(1, b); }, damping(1.0, kt), 16,
        state_envelope(NumberState{1}));
    worst_mean = std::max(worst_mean,
                          std::abs(mean_photon(pnd) - std::exp(-2.0 * kt)));
  }
  Outcome o;
  o.pass = worst_dev <= 1e-5 && worst_sum <= 1e-6 && worst_mean <= 1e-5;
  o.detail = "p(n) dev = " + fmt(worst_dev) + " (tol 1e-5), |sum - 1| = " +
             fmt(worst_sum) + " (tol 1e-6), mean dev = " + fmt(worst_mean) +
             " (tol 1e-5)";
  return o;
}

// ---------------------------------------------------------------------------
// Criterion 7: the verification tool quantifies the suspect thermal closed
// form at (m=1, z=1, nbar=0.5, kappa t=1), reports its PASS/FAIL separately,
// and runs to completion either way (exit 0 without --strict).
// ---------------------------------------------------------------------------
Outcome criterion7() {
  namespace fs = std::filesystem;
  const fs::path out =
      fs::temp_directory_path() / ("wignersim_acc_" + std::to_string(::getpid()) + ".json");
  const std::string cmd =
      std::string(WIGNERSIM_BIN) + " verify --quick --out " + out.string() + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  Outcome o;
  if (pipe == nullptr) {
    o.detail = "could not launch the verify tool";
    return o;
  }
  char buf[1024];
  while (fgets(buf, sizeof buf, pipe) != nullptr) {
  }
  const int status = pclose(pipe);
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;

  std::ifstream is(out);
  if (!is.good()) {
    o.detail = "verify did not produce its report (exit " + std::to_string(code) + ")";
    return o;
  }
  json rep;
  try {
    rep = json::parse(is);
  } catch (const std::exception& e) {
    o.detail = std::string("unparseable report: ") + e.what();
    return o;
  }
  fs::remove(out);
  const bool has_status = rep.contains("eq412_status") &&
                          rep["eq412_status"].contains("max_abs_dev") &&
                          rep["eq412_status"].contains("pass");
  if (!has_status) {
    o.detail = "report lacks the quantified eq412_status block";
    return o;
  }
  const double dev = rep["eq412_status"]["max_abs_dev"].get<double>();
  const bool flagged = rep["eq412_status"]["pass"].get<bool>() == false;
  o.pass = code == 0 && dev > 0.0 && flagged;
  o.detail = "exit " + std::to_string(code) + ", quantified dev = " + fmt(dev) +
             ", flagged separately = " + (flagged ? "yes" : "no");
  return o;
}

// ---------------------------------------------------------------------------
// Criterion 8: special-function identities.  (a) the two-variable Hermite
// diagonal reduces to (-1)^n n! L_n(|x|^2) with relative error <= 1e-9 up to
// n = 15; (b) the Gaussian bilinear integral identity is reproduced to 1e-10
// by the library quadrature; (c) the Hermite double sum equals exact int64
// generating-function Taylor coefficients for all m, n <= 4, exactly.
// ---------------------------------------------------------------------------
Outcome criterion8() {
  // (a) diagonal-to-Laguerre bridge.
  const complex<double> x = 1.1 * std::polar(1.0, 0.8);
  double worst_rel = 0.0;
  for (int n = 0; n <= 15; ++n) {
    const complex<double> h = hermite2(n, n, x, std::conj(x));
    const double ref =
        ((n % 2 == 0) ? 1.0 : -1.0) * std::tgamma(n + 1.0) * laguerre(n, std::norm(x));
    worst_rel = std::max(worst_rel, std::abs(h - ref) / std::abs(ref));
  }

  // (b) (1/pi) int e^{-|b|^2 + 0.3 b + 0.2 b*} = e^{0.06}, and the complex
  // case (1/pi) int e^{-2|b|^2 + xi b + (xi b)*} = 0.5 e^{|xi|^2/2} at
  // xi = 0.3 + 0.4i.
  const auto env1 = GaussianEnvelope::at({0.0, 0.0}, 1.0, 0);
  const double g1 = integrate_2d(
                        [](PhasePoint b) {
                          return std::exp(complex<double>(-std::norm(b)) + 0.3 * b +
                                          0.2 * std::conj(b));
                        },
                        rule_for(env1))
                        .real() / kPi;
  const auto env2 = GaussianEnvelope::at({0.0, 0.0}, 2.0, 0);
  const complex<double> xi{0.3, 0.4};
  const double g2 = integrate_2d(
                        [xi](PhasePoint b) {
                          const complex<double> e =
                              -2.0 * std::norm(b) + xi * b + std::conj(xi * b);
                          return std::exp(e);
                        },
                        rule_for(env2))
                        .real() / kPi;
  const double gauss_dev = std::max(std::abs(g1 - std::exp(0.06)),
                                    std::abs(g2 - 0.5 * std::exp(0.125)));

  // (c) exact integer generating-function coefficients:
  //   H_{m,n}(x,y) = sum_l (-1)^l C(m,l) C(n,l) l! x^{m-l} y^{n-l}
  // assembled in int64 arithmetic and compared bit-for-bit.
  auto fact = [](int k) {
    std::int64_t f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  };
  auto binom = [&](int a, int b) { return fact(a) / (fact(b) * fact(a - b)); };
  auto ipow_i64 = [](std::int64_t base, int e) {
    std::int64_t r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
  };
  bool exact_ok = true;
  for (const auto& [xi64, yi64] : std::vector<std::pair<std::int64_t, std::int64_t>>{
           {2, -3}, {-1, 3}, {0, 2}}) {
    for (int m = 0; m <= 4; ++m) {
      for (int n = 0; n <= 4; ++n) {
        std::int64_t href = 0;
        for (int l = 0; l <= std::min(m, n); ++l) {
          const std::int64_t sign = (l % 2 == 0) ? 1 : -1;
          href += sign * binom(m, l) * binom(n, l) * fact(l) *
                  ipow_i64(xi64, m - l) * ipow_i64(yi64, n - l);
        }
        const auto hlib = hermite2(m, n, {static_cast<double>(xi64), 0.0},
                                   {static_cast<double>(yi64), 0.0});
        if (hlib.real() != static_cast<double>(href) || hlib.imag() != 0.0) {
          exact_ok = false;
        }
      }
    }
  }

  Outcome o;
  o.pass = worst_rel <= 1e-9 && gauss_dev <= 1e-10 && exact_ok;
  o.detail = "bridge rel dev = " + fmt(worst_rel) + " (tol 1e-9), Gaussian dev = " +
             fmt(gauss_dev) + " (tol 1e-10), integer Taylor match = " +
             (exact_ok ? "exact" : "BROKEN");
  return o;
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    Outcome (*fn)();
    double budget_seconds;
  };
  const Entry entries[] = {
      {"half-normalization and vacuum peak", criterion1, 5.0},
      {"damping closed form vs quadrature", criterion2, 60.0},
      {"gain-free and zero-occupation reductions", criterion3, 30.0},
      {"positivity threshold", criterion4, 120.0},
      {"Fock-oracle equivalence", criterion5, 120.0},
      {"closed photon statistics", criterion6, 60.0},
      {"verification tool quantifies the suspect form", criterion7, 60.0},
      {"special-function identities", criterion8, 10.0},
  };

  bool all_pass = true;
  int index = 0;
  for (const auto& e : entries) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = e.fn();
    } catch (const std::exception& ex) {
      o.pass = false;
      o.detail = std::string("exception: ") + ex.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = secs <= e.budget_seconds;
    const bool pass = o.pass && in_budget;
    all_pass = all_pass && pass;
    std::printf("[%s] criterion %d: %s (%s) [%.2f s%s]\n", pass ? "PASS" : "FAIL",
                index, e.name, o.detail.c_str(), secs,
                in_budget ? "" : ", OVER BUDGET");
  }
  std::printf("%s\n", all_pass ? "acceptance: ALL PASS" : "acceptance: FAILURES");
  return all_pass ? 0 : 1;
}
