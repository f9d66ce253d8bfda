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
//
// wignersim: Wigner-function and photon-statistics evolution in loss, gain,
// and thermal channels, with a brute-force Lindblad oracle for verification.
//
// Exit codes: 0 success; 1 tolerance breach; 2 usage/configuration error;
// 3 accuracy or truncation failure inside the numerics.

#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "wigner/evolution.hpp"
#include "wigner/fock_oracle.hpp"
#include "wigner/parallel.hpp"
#include "wigner/photon_stats.hpp"
#include "wigner/states.hpp"
#include "wigner/types.hpp"
#include "wigner/verify.hpp"
#include "wigner/version.hpp"
#include "wigner/wigner_field.hpp"

namespace {

using nlohmann::json;
using namespace wigner;

constexpr int kExitTolerance = 1;
constexpr int kExitUsage = 2;
constexpr int kExitAccuracy = 3;

struct Options {
  std::string state = "coherent";
  int n = 0;
  std::string z = "0+0i";
  int m = 1;
  double nbar = 0.0;
  std::optional<double> bath_nbar;

  std::string channel = "damping";
  double kappa = 1.0;
  double g = 0.0;
  double t = 0.0;

  std::string method = "quadrature";
  std::string grid = "-3:3:61";
  bool std_normalization = false;
  std::string out;
  double tol = -1.0;  // per-command default resolved later
  int n_cut = -1;

  bool quick = false;
  bool strict = false;
  bool verify_minima = false;
  std::string tc_z = "1+0i";
};

std::string complex_literal(std::complex<double> v) {
  std::ostringstream os;
  os << format_g17(v.real()) << (v.imag() < 0 ? "" : "+") << format_g17(v.imag())
     << 'i';
  return os.str();
}

StateSpec make_state(const Options& o) {
  if (o.state == "number") return NumberState{o.n};
  if (o.state == "coherent") return CoherentState{parse_complex(o.z)};
  if (o.state == "pacs") return PacsState{o.m, parse_complex(o.z)};
  if (o.state == "thermal") return ThermalState{o.nbar};
  throw std::invalid_argument("unknown state kind '" + o.state + "'");
}

ChannelParams make_channel(const Options& o) {
  ChannelParams p;
  p.kappa = o.kappa;
  p.t = o.t;
  // Copied unconditionally: validate() rejects a gain or bath occupation
  // handed to a channel that has none, instead of silently dropping it.
  p.g = o.g;
  if (o.channel == "damping") {
    p.kind = ChannelKind::Damping;
    if (o.bath_nbar) p.nbar = *o.bath_nbar;
  } else if (o.channel == "laser") {
    p.kind = ChannelKind::Laser;
    if (o.bath_nbar) p.nbar = *o.bath_nbar;
  } else if (o.channel == "thermal") {
    p.kind = ChannelKind::Thermal;
    // --nbar names the state's occupation when the state is thermal; the
    // bath then defaults to the same value unless --bath-nbar overrides it.
    p.nbar = o.bath_nbar.value_or(o.nbar);
  } else {
    throw std::invalid_argument("unknown channel '" + o.channel + "'");
  }
  validate(p);
  return p;
}

json state_json(const StateSpec& spec) {
  json j;
  std::visit(
      [&j](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, NumberState>) {
          j = {{"kind", "number"}, {"n", s.n}};
        } else if constexpr (std::is_same_v<T, CoherentState>) {
          j = {{"kind", "coherent"}, {"z", complex_literal(s.z)}};
        } else if constexpr (std::is_same_v<T, PacsState>) {
          j = {{"kind", "pacs"}, {"m", s.m}, {"z", complex_literal(s.z)}};
        } else {
          j = {{"kind", "thermal"}, {"nbar", s.nbar}};
        }
      },
      spec);
  return j;
}

json channel_json(const ChannelParams& p) {
  json j;
  switch (p.kind) {
    case ChannelKind::Damping:
      j = {{"kind", "damping"}, {"kappa", p.kappa}, {"t", p.t}};
      break;
    case ChannelKind::Laser:
      j = {{"kind", "laser"}, {"kappa", p.kappa}, {"g", p.g}, {"t", p.t}};
      break;
    case ChannelKind::Thermal:
      j = {{"kind", "thermal"}, {"kappa", p.kappa}, {"nbar", p.nbar}, {"t", p.t}};
      break;
  }
  return j;
}

json base_meta(const char* command, const Options& o, const StateSpec& spec,
               const ChannelParams& p) {
  json meta;
  meta["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  meta["command"] = command;
  meta["state"] = state_json(spec);
  meta["channel"] = channel_json(p);
  meta["normalization"] = o.std_normalization ? "standard" : "half";
  return meta;
}

/// The closed-form evolved Wigner value, or nullopt when no closed expression
/// covers the state/channel pair.  Number and coherent states ride the
/// photon-added expression through m = 0 (coherent) and z = 0 (number).
std::optional<double> closed_wigner_value(const StateSpec& spec, const ChannelParams& p,
                                          PhasePoint a) {
  if (p.kind == ChannelKind::Damping) {
    if (const auto* ns = std::get_if<NumberState>(&spec)) {
      if (ns->n > kMaxPhotonAdded) return std::nullopt;
      return evolve_pacs_damping(ns->n, 0.0, p.kappa, p.t, a);
    }
    if (const auto* cs = std::get_if<CoherentState>(&spec)) {
      return evolve_pacs_damping(0, cs->z, p.kappa, p.t, a);
    }
    if (const auto* ps = std::get_if<PacsState>(&spec)) {
      return evolve_pacs_damping(ps->m, ps->z, p.kappa, p.t, a);
    }
    return std::nullopt;
  }
  if (p.kind == ChannelKind::Thermal) {
    if (const auto* ps = std::get_if<PacsState>(&spec)) {
      if (p.t == 0.0) return wigner_pacs(ps->m, ps->z, a);
      return evolve_pacs_thermal(ps->m, ps->z, p.kappa, p.nbar, p.t, a);
    }
  }
  return std::nullopt;
}

bool closed_wigner_available(const StateSpec& spec, const ChannelParams& p) {
  return closed_wigner_value(spec, p, PhasePoint{0.0, 0.0}).has_value();
}

int cmd_wigner(const Options& o) {
  const StateSpec spec = make_state(o);
  validate(spec);
  const ChannelParams p = make_channel(o);
  const GridSpec grid = parse_grid(o.grid);
  if (o.out.empty()) {
    throw std::invalid_argument("wigner: --out PATH is required");
  }
  const double tol = o.tol > 0 ? o.tol : 1e-8;

  const bool is_thermal_pacs =
      p.kind == ChannelKind::Thermal && std::holds_alternative<PacsState>(spec);
  if (o.method == "closed" && !closed_wigner_available(spec, p)) {
    throw std::invalid_argument(
        "wigner: --method closed covers number/coherent/pacs states in the "
        "damping channel and pacs states in the thermal channel only");
  }

  WignerField field;
  field.grid = grid;
  field.values.assign(grid.points(), 0.0);
  json diag;
  const double norm_factor = o.std_normalization ? 2.0 : 1.0;

  // Oracle state is shared read-only across grid workers.
  std::optional<FockDensityMatrix> rho_t;
  if (o.method == "oracle") {
    const int n_max = oracle_n_max(spec, p);
    const FockDensityMatrix rho0 = fock_density(spec, n_max);
    const int steps = planned_steps(p, rho0.dim());
    rho_t = evolve_density(rho0, p, steps);
    const double corner = std::max({std::abs(grid.x_min), std::abs(grid.x_max),
                                    std::abs(grid.y_min), std::abs(grid.y_max)});
    diag["oracle"] = {
        {"n_max", n_max},
        {"steps", steps},
        {"trace", rho_t->trace()},
        {"hermiticity_error", rho_t->hermiticity_error()},
        {"max_displacement_tail",
         displacement_tail_estimate(n_max + 1,
                                    PhasePoint{corner, corner})}};
  }

  parallel_for(grid.points(), [&](int idx) {
    const int j = idx / grid.nx;
    const int i = idx % grid.nx;
    const PhasePoint a{grid.x_at(i), grid.y_at(j)};
    double w = 0.0;
    if (o.method == "closed") {
      w = *closed_wigner_value(spec, p, a);
    } else if (o.method == "quadrature") {
      w = evolve_state(spec, p, a);
    } else if (o.method == "oracle") {
      w = wigner_from_density(*rho_t, a);
    } else {
      throw std::invalid_argument("unknown method '" + o.method + "'");
    }
    field.values[idx] = norm_factor * w;
  });

  // Cross-method diagnostics on a coarse subgrid (5x5 or the grid itself if
  // smaller): closed methods are checked against quadrature, the oracle
  // against the closed form when one exists.
  int exit_code = 0;
  if (o.method == "closed" || (o.method == "oracle" && closed_wigner_available(spec, p))) {
    double dev = 0.0;
    const int sx = std::min(grid.nx, 5);
    const int sy = std::min(grid.ny, 5);
    for (int jj = 0; jj < sy; ++jj) {
      for (int ii = 0; ii < sx; ++ii) {
        const int gi = ii * (grid.nx - 1) / (sx - 1 > 0 ? sx - 1 : 1);
        const int gj = jj * (grid.ny - 1) / (sy - 1 > 0 ? sy - 1 : 1);
        const PhasePoint a{grid.x_at(gi), grid.y_at(gj)};
        const double ref = o.method == "closed" ? evolve_state(spec, p, a)
                                                : *closed_wigner_value(spec, p, a);
        const double got = field.values[gj * grid.nx + gi] / norm_factor;
        dev = std::max(dev, std::abs(got - ref));
      }
    }
    const char* key = o.method == "closed" ? "closed_vs_quadrature_max_abs_dev"
                                           : "closed_vs_oracle_max_abs_dev";
    diag[key] = dev;
    diag["cross_check_tol"] = tol;
    if (is_thermal_pacs) {
      // Known-suspect closed expression: the deviation is reported for the
      // record but never fails the run.
      diag["closed_form_status"] = "suspect";
    } else if (dev > tol) {
      exit_code = kExitTolerance;
    }
  } else if (o.method == "quadrature") {
    const KernelFactors kf = kernel_factors(p);
    if (p.t > 0.0 && kf.A != 0.0) {
      GaussianEnvelope kernel_env;
      kernel_env.precision = 2.0 * kf.decay * kf.decay / kf.A;
      const GaussianEnvelope env = combine(kernel_env, state_envelope(spec));
      diag["quadrature"] = {{"order", auto_order(env)}};
    }
  }

  write_csv(field, o.out);
  json meta = base_meta("wigner", o, spec, p);
  meta["method"] = o.method;
  meta["grid"] = {{"x_min", grid.x_min}, {"x_max", grid.x_max}, {"nx", grid.nx},
                  {"y_min", grid.y_min}, {"y_max", grid.y_max}, {"ny", grid.ny}};
  meta["diagnostics"] = diag;
  write_sidecar(meta, sidecar_path(o.out));
  if (exit_code != 0) {
    std::cerr << "wignersim: cross-check deviation exceeds tolerance (see "
              << sidecar_path(o.out) << ")\n";
  }
  return exit_code;
}

int cmd_pnd(const Options& o) {
  const StateSpec spec = make_state(o);
  validate(spec);
  const ChannelParams p = make_channel(o);
  if (o.out.empty()) {
    throw std::invalid_argument("pnd: --out PATH is required");
  }
  const double tol = o.tol > 0 ? o.tol : 1e-5;

  // Closed column: photon-added family (coherent = m 0) in loss/gain channels.
  int closed_m = -1;
  std::complex<double> closed_z;
  if (p.kind != ChannelKind::Thermal) {
    if (const auto* cs = std::get_if<CoherentState>(&spec)) {
      closed_m = 0;
      closed_z = cs->z;
    } else if (const auto* ps = std::get_if<PacsState>(&spec)) {
      closed_m = ps->m;
      closed_z = ps->z;
    }
  }

  const double mean0 = initial_mean_photon(spec);
  const KernelFactors kf = kernel_factors(p);
  const double e2 = kf.decay * kf.decay;
  const double mean_t = mean0 * e2 + 0.5 * (kf.A + e2 - 1.0);
  const int n_cut = o.n_cut >= 0 ? o.n_cut : default_n_cut(std::max(mean0, mean_t));

  const auto quad = pnd_evolved(
      [&spec](PhasePoint b) { return wigner_initial(spec, b); }, p, n_cut,
      state_envelope(spec));

  const int oracle_dim_floor = std::max(oracle_n_max(spec, p), n_cut);
  const auto rho_t = evolve_density(fock_density(spec, oracle_dim_floor), p);
  const auto oracle = pnd_from_density(rho_t);

  std::vector<double> closed;
  bool used_fallback = false;
  if (closed_m >= 0) {
    closed.resize(n_cut + 1);
    for (int n = 0; n <= n_cut; ++n) {
      bool fb = false;
      closed[n] = pnd_pacs_closed(closed_m, closed_z, p, n, &fb);
      used_fallback = used_fallback || fb;
    }
  }

  // Rows + sum row, all columns 17 significant digits.
  std::ofstream ofs(o.out, std::ios::binary);
  if (!ofs) throw std::runtime_error("pnd: cannot open '" + o.out + "'");
  ofs << "n";
  if (closed_m >= 0) ofs << ",p_closed";
  ofs << ",p_quadrature,p_oracle\n";
  double sum_c = 0.0, sum_q = 0.0, sum_o = 0.0;
  double dev = 0.0;
  for (int n = 0; n <= n_cut; ++n) {
    const double po = oracle.probs[n];
    ofs << n;
    if (closed_m >= 0) {
      ofs << ',' << format_g17(closed[n]);
      sum_c += closed[n];
      dev = std::max(dev, std::abs(closed[n] - quad.probs[n]));
      dev = std::max(dev, std::abs(closed[n] - po));
    }
    ofs << ',' << format_g17(quad.probs[n]) << ',' << format_g17(po) << '\n';
    sum_q += quad.probs[n];
    sum_o += po;
    dev = std::max(dev, std::abs(quad.probs[n] - po));
  }
  ofs << "sum";
  if (closed_m >= 0) ofs << ',' << format_g17(sum_c);
  ofs << ',' << format_g17(sum_q) << ',' << format_g17(sum_o) << '\n';
  if (!ofs) throw std::runtime_error("pnd: failed writing '" + o.out + "'");

  json meta = base_meta("pnd", o, spec, p);
  meta["n_cut"] = n_cut;
  meta["diagnostics"] = {{"max_pairwise_dev", dev},
                         {"tol", tol},
                         {"quadrature_tail_bound", quad.tail_bound},
                         {"oracle_tail_bound", oracle.tail_bound},
                         {"oracle_trace", rho_t.trace()}};
  if (closed_m >= 0) {
    meta["diagnostics"]["closed_used_quadrature_fallback"] = used_fallback;
  }
  write_sidecar(meta, sidecar_path(o.out));

  if (dev > tol) {
    std::cerr << "wignersim: pnd columns disagree by " << dev << " > " << tol << '\n';
    return kExitTolerance;
  }
  return 0;
}

int cmd_tc(const Options& o) {
  if (o.nbar < 0) throw std::domain_error("tc: nbar must be >= 0");
  const double tc = positivity_time(o.nbar);
  std::cout << "kt_c(nbar=" << o.nbar << ") = " << format_g17(tc) << '\n';
  if (!o.verify_minima) return 0;

  // Scan the evolved Wigner minimum just below, at, and above the threshold.
  // The zero-occupation bath has the exact closed damping form; a warm bath
  // goes through the (authoritative) quadrature path.
  const std::complex<double> z = parse_complex(o.tc_z);
  const int m = o.m;
  for (double factor : {0.5, 1.0, 1.2}) {
    ChannelParams p;
    if (o.nbar == 0.0) {
      p.kind = ChannelKind::Damping;
    } else {
      p.kind = ChannelKind::Thermal;
      p.nbar = o.nbar;
    }
    p.kappa = 1.0;
    p.t = factor * tc;
    const StateSpec spec{PacsState{m, z}};
    const GridSpec grid = parse_grid("-3:3:41");
    std::vector<double> values(grid.points());
    parallel_for(grid.points(), [&](int idx) {
      const PhasePoint a{grid.x_at(idx % grid.nx), grid.y_at(idx / grid.nx)};
      values[idx] = o.nbar == 0.0 ? evolve_pacs_damping(m, z, p.kappa, p.t, a)
                                  : evolve_state(spec, p, a);
    });
    const double min_w = *std::min_element(values.begin(), values.end());
    std::cout << "min W over [-3,3]^2 (41x41), t = " << factor
              << "*t_c: " << format_g17(min_w) << '\n';
  }
  return 0;
}

int cmd_verify(const Options& o) {
  const VerifyReport rep = run_verify(o.quick);
  const json j = rep.to_json();
  if (o.out.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    write_sidecar(j, o.out);
    std::cout << "report written to " << o.out << '\n';
  }
  std::cout << "cells: " << rep.cells.size()
            << ", all pass: " << (rep.all_pass(false) ? "yes" : "no")
            << ", suspect-formula suite: " << (rep.eq412_pass ? "PASS" : "FAIL")
            << " (max dev " << rep.eq412_max_abs_dev << ")\n";
  return rep.all_pass(o.strict) ? 0 : kExitTolerance;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wigner-function and photon-statistics evolution in loss, gain, "
               "and thermal channels"};
  app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
  app.require_subcommand(1);
  Options o;

  const auto add_state_flags = [&o](CLI::App* cmd) {
    cmd->add_option("--state", o.state, "Initial state kind")
        ->check(CLI::IsMember({"number", "coherent", "pacs", "thermal"}));
    cmd->add_option("--n", o.n, "Number-state excitation (state=number)");
    cmd->add_option("--z", o.z, "Coherent amplitude, complex literal like 1.0+0.5i");
    cmd->add_option("--m", o.m, "Photon-added order (state=pacs)");
    cmd->add_option("--nbar", o.nbar, "Thermal occupation (state or bath)");
  };
  const auto add_channel_flags = [&o](CLI::App* cmd) {
    cmd->add_option("--channel", o.channel, "Evolution channel")
        ->check(CLI::IsMember({"damping", "laser", "thermal"}));
    cmd->add_option("--kappa", o.kappa, "Loss rate kappa > 0");
    cmd->add_option("--g", o.g, "Gain rate (channel=laser)");
    cmd->add_option("--t", o.t, "Evolution time >= 0");
    cmd->add_option("--bath-nbar", o.bath_nbar,
                    "Bath occupation when it differs from the state's --nbar");
  };

  CLI::App* wig = app.add_subcommand("wigner", "Evolved Wigner function on a grid");
  add_state_flags(wig);
  add_channel_flags(wig);
  wig->add_option("--method", o.method, "Evaluation route")
      ->check(CLI::IsMember({"closed", "quadrature", "oracle"}));
  wig->add_option("--grid", o.grid, "XMIN:XMAX:NX[,YMIN:YMAX:NY]");
  wig->add_flag("--std-normalization", o.std_normalization,
                "Report integral-1 Wigner values (default integrates to 1/2)");
  wig->add_option("--out", o.out, "Output CSV path (JSON sidecar written beside it)");
  wig->add_option("--tol", o.tol, "Cross-check tolerance (default 1e-8)");

  CLI::App* pnd = app.add_subcommand("pnd", "Photon-number distribution table");
  add_state_flags(pnd);
  add_channel_flags(pnd);
  pnd->add_option("--n-cut", o.n_cut, "Largest photon number reported");
  pnd->add_option("--out", o.out, "Output CSV path (JSON sidecar written beside it)");
  pnd->add_option("--tol", o.tol, "Pairwise column tolerance (default 1e-5)");

  CLI::App* tc = app.add_subcommand("tc", "Positivity threshold time of an evolved "
                                          "photon-added coherent state");
  tc->add_option("--nbar", o.nbar, "Bath occupation");
  tc->add_option("--m", o.m, "Photon-added order for --verify");
  tc->add_option("--z", o.tc_z, "Coherent amplitude for --verify");
  tc->add_flag("--verify", o.verify_minima,
               "Also scan grid minima at 0.5, 1.0, 1.2 times t_c");

  CLI::App* ver = app.add_subcommand("verify", "Closed-form vs quadrature vs oracle "
                                               "cross-validation report");
  ver->add_flag("--quick", o.quick, "Damping-only subset (< 30 s)");
  ver->add_flag("--strict", o.strict,
                "Let the documented-suspect closed form fail the run too");
  ver->add_option("--out", o.out, "Write the JSON report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (wig->parsed()) return cmd_wigner(o);
    if (pnd->parsed()) return cmd_pnd(o);
    if (tc->parsed()) return cmd_tc(o);
    return cmd_verify(o);
  } catch (const AccuracyError& e) {
    std::cerr << "wignersim: accuracy: " << e.what() << '\n';
    return kExitAccuracy;
  } catch (const TruncationError& e) {
    std::cerr << "wignersim: truncation: " << e.what() << '\n';
    return kExitAccuracy;
  } catch (const std::domain_error& e) {
    std::cerr << "wignersim: invalid configuration: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "wignersim: invalid argument: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "wignersim: " << e.what() << '\n';
    return kExitAccuracy;
  }
}
