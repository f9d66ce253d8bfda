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

// Photon-number distributions: overlap rule, evolved quadrature, closed forms.
// [DERIVED] literals were computed with an independent scipy/numpy prototype
// and frozen; [TRIVIAL] cases follow from the definitions by hand.

#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>

#include <doctest.h>

#include "wigner/photon_stats.hpp"
#include "wigner/states.hpp"
#include "wigner/types.hpp"

using namespace wigner;
using std::complex;

namespace {

ChannelParams damping(double kappa, double t) {
  return {ChannelKind::Damping, kappa, 0.0, 0.0, t};
}
ChannelParams laser(double kappa, double g, double t) {
  return {ChannelKind::Laser, kappa, g, 0.0, t};
}
ChannelParams thermal(double kappa, double nbar, double t) {
  return {ChannelKind::Thermal, kappa, 0.0, nbar, t};
}

std::function<double(PhasePoint)> w0_of(StateSpec spec) {
  return [spec](PhasePoint a) { return wigner_initial(spec, a); };
}

}  // namespace

TEST_CASE("pnd_factors: values and domain") {
  const auto f = pnd_factors(damping(1.0, 0.3), 1, {1.0, 0.0}, 0);
  CHECK(f.mu > 1.0);
  CHECK(f.omega > 0.0);
  CHECK(f.omega < 1.0);
  CHECK(f.lambda > 0.0);
  CHECK(std::isfinite(f.Nfac));
  // Width A >= 1 pushes sigma off the real axis: no closed factors there.
  CHECK_THROWS_AS(pnd_factors(laser(0.6, 0.4, 1.0), 1, {1.0, 0.0}, 0),
                  std::domain_error);
}

TEST_CASE("pnd_pacs_closed: exact initial distribution at t = 0") {
  // [TRIVIAL] p(n) = e^{-|z|^2} |z|^{2(n-m)} n! / ((n-m)!^2 m! L_m(-|z|^2)),
  // zero below the added-photon floor; z = 1, m = 1 gives n e^{-1}/(n-1)!/2.
  const auto p0 = damping(1.0, 0.0);
  const complex<double> z{1.0, 0.0};
  CHECK(pnd_pacs_closed(1, z, p0, 0) == 0.0);
  CHECK(std::abs(pnd_pacs_closed(1, z, p0, 1) - 1.8393972058572117e-01) < 1e-15);
  CHECK(std::abs(pnd_pacs_closed(1, z, p0, 2) - 3.6787944117144233e-01) < 1e-15);
  CHECK(std::abs(pnd_pacs_closed(1, z, p0, 3) - 2.7590958087858175e-01) < 1e-15);
  // [TRIVIAL] z = 0: the number state |m>.
  CHECK(pnd_pacs_closed(2, {0.0, 0.0}, p0, 2) == 1.0);
  CHECK(pnd_pacs_closed(2, {0.0, 0.0}, p0, 3) == 0.0);
}

TEST_CASE("pnd_pacs_closed: frozen damping values") {
  // [DERIVED] m=1, z=1, kappa=1, t=0.3.
  const auto p = damping(1.0, 0.3);
  const complex<double> z{1.0, 0.0};
  const double expect[5] = {1.8910622156938300e-01, 4.0532303110268364e-01,
                            2.8095743260131362e-01, 9.8362074160819338e-02,
                            2.2122643614538723e-02};
  bool fb = true;
  for (int n = 0; n < 5; ++n) {
    CHECK(std::abs(pnd_pacs_closed(1, z, p, n, &fb) - expect[n]) < 1e-13);
    CHECK(fb == false);
  }
  // Unit total mass once the tail is included.
  double sum = 0.0;
  for (int n = 0; n < 20; ++n) sum += pnd_pacs_closed(1, z, p, n);
  CHECK(std::abs(sum - 1.0) < 1e-8);
}

TEST_CASE("pnd_pacs_closed: matches the quadrature path") {
  const complex<double> z{1.0, 0.0};
  for (int m : {1, 2}) {
    for (double kt : {0.3, 1.0}) {
      const auto p = damping(1.0, kt);
      const StateSpec spec = PacsState{m, z};
      const auto quad = pnd_evolved(w0_of(spec), p, 9, state_envelope(spec));
      for (int n = 0; n < 9; ++n) {
        CHECK(std::abs(pnd_pacs_closed(m, z, p, n) - quad.probs[n]) < 1e-9);
      }
    }
  }
}

TEST_CASE("pnd_pacs_closed: double-sum branch collapses to single sum at g = 0") {
  const complex<double> z{1.0, 0.0};
  for (int m : {1, 2}) {
    for (int n = 0; n < 7; ++n) {
      const double general = detail::pnd_pacs_closed_general(m, z, laser(1.0, 0.0, 0.4), n);
      const double single = pnd_pacs_closed(m, z, damping(1.0, 0.4), n);
      CHECK(std::abs(general - single) < 1e-10 * (1.0 + single));
    }
  }
}

TEST_CASE("pnd_pacs_closed: laser channel below A = 1 uses the closed branch") {
  // kappa=1, g=0.3, t=0.3 keeps the kernel width A ~ 0.64 < 1.
  const auto p = laser(1.0, 0.3, 0.3);
  const complex<double> z{1.0, 0.0};
  const StateSpec spec = PacsState{1, z};
  const auto quad = pnd_evolved(w0_of(spec), p, 9, state_envelope(spec));
  bool fb = true;
  for (int n = 0; n < 7; ++n) {
    CHECK(std::abs(pnd_pacs_closed(1, z, p, n, &fb) - quad.probs[n]) < 1e-9);
    CHECK(fb == false);
  }
}

TEST_CASE("pnd_pacs_closed: A >= 1 falls back to quadrature and says so") {
  // [DERIVED] m=1, z=1, kappa=0.6, g=0.4, t=1 (kernel width A ~ 1.65).
  const auto p = laser(0.6, 0.4, 1.0);
  const complex<double> z{1.0, 0.0};
  const double expect[5] = {1.9138445104396232e-01, 2.3000078789252243e-01,
                            1.9629792320236844e-01, 1.4360659996974676e-01,
                            9.5877465323661662e-02};
  for (int n = 0; n < 5; ++n) {
    bool fb = false;
    CHECK(std::abs(pnd_pacs_closed(1, z, p, n, &fb) - expect[n]) < 1e-12);
    CHECK(fb == true);
  }
  // The general branch itself must refuse: its factors do not exist.
  CHECK_THROWS_AS(detail::pnd_pacs_closed_general(1, z, p, 0), std::domain_error);
}

TEST_CASE("pnd_pacs_closed: thermal channel is out of scope") {
  CHECK_THROWS_AS(pnd_pacs_closed(1, {1.0, 0.0}, thermal(1.0, 0.5, 0.5), 0),
                  std::domain_error);
}

TEST_CASE("pnd_overlap: projective check on a number state") {
  // [TRIVIAL] overlap of W_{|n><n|} with W_{|2><2|} is the Kronecker delta.
  const auto pnd =
      pnd_overlap(w0_of(NumberState{2}), 6, state_envelope(NumberState{2}));
  for (int n = 0; n < 6; ++n) {
    CHECK(std::abs(pnd.probs[n] - (n == 2 ? 1.0 : 0.0)) < 1e-10);
  }
}

TEST_CASE("pnd_evolved: t = 0 collapses to the overlap rule") {
  const StateSpec spec = PacsState{1, {1.0, 0.0}};
  const auto a = pnd_evolved(w0_of(spec), damping(1.0, 0.0), 8, state_envelope(spec));
  const auto b = pnd_overlap(w0_of(spec), 8, state_envelope(spec));
  for (int n = 0; n < 8; ++n) {
    CHECK(std::abs(a.probs[n] - b.probs[n]) < 1e-12);
  }
}

TEST_CASE("pnd_evolved: frozen thermal-channel values") {
  // [DERIVED] m=1, z=1, nbar=0.5, kappa=1, t=0.7 (no closed form exists for
  // the thermal channel: quadrature carries the load and must be right).
  const StateSpec spec = PacsState{1, {1.0, 0.0}};
  const auto pnd = pnd_evolved(w0_of(spec), thermal(1.0, 0.5, 0.7), 18,
                               state_envelope(spec));
  const double expect[5] = {4.5383551184005250e-01, 2.8759079867023868e-01,
                            1.4596511775474186e-01, 6.6239046434005369e-02,
                            2.8037732477550981e-02};
  for (int n = 0; n < 5; ++n) {
    CHECK(std::abs(pnd.probs[n] - expect[n]) < 1e-10);
  }
  CHECK(std::abs(pnd.sum() + pnd.tail_bound - 1.0) < 1e-7);
}

TEST_CASE("pnd_evolved: probabilities are clean") {
  const StateSpec spec = PacsState{2, {1.0, 0.0}};
  const auto pnd = pnd_evolved(w0_of(spec), damping(1.0, 0.4), 20, state_envelope(spec));
  double sum = 0.0;
  for (double q : pnd.probs) {
    CHECK(q >= 0.0);
    CHECK(q <= 1.0);
    sum += q;
  }
  CHECK(std::abs(sum - 1.0) < 1e-7);
}

TEST_CASE("mean_photon: conserved at t = 0, decays exponentially") {
  const StateSpec spec = PacsState{1, {1.0, 0.0}};
  // [DERIVED] initial mean 5/2.
  const auto p0 = pnd_evolved(w0_of(spec), damping(1.0, 0.0), 18, state_envelope(spec));
  CHECK(std::abs(mean_photon(p0) - 2.5) < 1e-8);
  // [DERIVED] pure damping: mean(t) = mean(0) e^{-2 kappa t}.
  const auto pt = pnd_evolved(w0_of(spec), damping(1.0, 0.3), 18, state_envelope(spec));
  CHECK(std::abs(mean_photon(pt) - 2.5 * std::exp(-0.6)) < 1e-8);
}

TEST_CASE("mean_photon: refuses heavy tails") {
  PhotonNumberDistribution pnd;
  pnd.probs = {0.5, 0.3};
  pnd.n_cut = 2;
  pnd.tail_bound = 0.2;
  CHECK_THROWS_AS(mean_photon(pnd), AccuracyError);
}

TEST_CASE("default_n_cut") {
  CHECK(default_n_cut(0.0) == 16);    // floor
  CHECK(default_n_cut(2.5) == 18);    // ceil(2.5 + 8 sqrt(3.5))
  CHECK(default_n_cut(100.0) == 64);  // hard cap
}
