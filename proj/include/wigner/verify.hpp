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

#ifndef WIGNER_VERIFY_HPP
#define WIGNER_VERIFY_HPP

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace wigner {

/// One closed-form / quadrature / oracle comparison over a sample grid.
struct ComparisonCell {
  std::string state;
  std::string channel;
  std::string quantity;  ///< "wigner" or "pnd"
  double max_abs_dev = 0.0;
  double tol = 0.0;
  bool pass = false;
};

/// Result of the full cross-validation matrix.  The closed-form thermal
/// Wigner expression is tracked separately: it is a *formula under test*
/// (known-suspect transcription), so its failure is reported but does not
/// fail the run unless the caller opts into strict mode.
struct VerifyReport {
  std::vector<ComparisonCell> cells;
  double eq412_max_abs_dev = 0.0;   ///< suspect-formula deviation vs quadrature
  bool eq412_pass = false;
  double runtime_seconds = 0.0;

  bool all_pass(bool strict) const;
  nlohmann::json to_json() const;
};

/// Runs the verification matrix: analytic evolution vs brute-force Lindblad
/// oracle (Wigner grids and photon-number diagonals) over the standard state
/// and channel samples, plus the suspect-formula suite.  `quick` restricts to
/// the damping channel (a strict subset, < 30 s even on one core).
VerifyReport run_verify(bool quick);

}  // namespace wigner

#endif  // WIGNER_VERIFY_HPP
