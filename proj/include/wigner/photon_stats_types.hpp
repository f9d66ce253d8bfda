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

#ifndef WIGNER_PHOTON_STATS_TYPES_HPP
#define WIGNER_PHOTON_STATS_TYPES_HPP

#include <vector>

namespace wigner {

/// Probabilities p(0..n_cut), inclusive, plus an estimate of the mass
/// beyond the cut.
/// Entries are clamped into [0, 1]; producers reject raw values outside
/// [-1e-9, 1 + 1e-9] (anything larger than quadrature noise is a bug, not
/// noise).  tail_bound is kept unclamped so sum() + tail_bound stays at 1
/// to within the producer's accuracy.
struct PhotonNumberDistribution {
  std::vector<double> probs;
  int n_cut = 0;
  double tail_bound = 0.0;

  double sum() const {
    double s = 0.0;
    for (double p : probs) s += p;
    return s;
  }
};

}  // namespace wigner

#endif  // WIGNER_PHOTON_STATS_TYPES_HPP
