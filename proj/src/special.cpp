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

#include "wigner/special.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace wigner {

namespace {

constexpr int kLogFactCache = 128;

std::array<double, kLogFactCache + 1> build_log_fact_table() {
  std::array<double, kLogFactCache + 1> table{};
  table[0] = 0.0;
  for (int k = 1; k <= kLogFactCache; ++k) {
    table[k] = table[k - 1] + std::log(static_cast<double>(k));
  }
  return table;
}

}  // namespace

double log_factorial(int n) {
  if (n < 0) throw std::domain_error("log_factorial: negative argument");
  static const std::array<double, kLogFactCache + 1> table = build_log_fact_table();
  if (n <= kLogFactCache) return table[n];
  return std::lgamma(static_cast<double>(n) + 1.0);
}

double laguerre(int n, double x) {
  if (n < 0 || n > 64) {
    throw std::domain_error("laguerre: order " + std::to_string(n) +
                            " outside supported range [0, 64]");
  }
  if (!std::isfinite(x)) throw std::domain_error("laguerre: non-finite argument");
  if (n == 0) return 1.0;
  double prev = 1.0;        // L_0
  double curr = 1.0 - x;    // L_1
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 - x) * curr - k * prev) / (k + 1.0);
    prev = curr;
    curr = next;
  }
  return curr;
}

double assoc_laguerre(int n, int k, double x) {
  if (n < 0 || n > 64) {
    throw std::domain_error("assoc_laguerre: order " + std::to_string(n) +
                            " outside supported range [0, 64]");
  }
  if (k < -n) {
    throw std::domain_error("assoc_laguerre: upper index below -n");
  }
  if (!std::isfinite(x)) throw std::domain_error("assoc_laguerre: non-finite argument");
  if (n == 0) return 1.0;
  const double a = static_cast<double>(k);
  double prev = 1.0;            // L_0^{(a)}
  double curr = 1.0 + a - x;    // L_1^{(a)}
  for (int j = 1; j < n; ++j) {
    const double next = ((2.0 * j + 1.0 + a - x) * curr - (j + a) * prev) / (j + 1.0);
    prev = curr;
    curr = next;
  }
  return curr;
}

std::complex<double> hermite2(int m, int n, std::complex<double> x,
                              std::complex<double> y) {
  if (m < 0 || n < 0) throw std::domain_error("hermite2: negative degree");
  const int lmax = std::min(m, n);
  // Powers x^{m-l}, y^{n-l} for l = 0..lmax, built once.
  std::vector<std::complex<double>> xp(m + 1), yp(n + 1);
  xp[0] = 1.0;
  for (int i = 1; i <= m; ++i) xp[i] = xp[i - 1] * x;
  yp[0] = 1.0;
  for (int i = 1; i <= n; ++i) yp[i] = yp[i - 1] * y;

  // Term coefficient m! n! / (l! (m-l)! (n-l)!) by the exact recurrence
  // c_{l+1} = c_l (m-l)(n-l)/(l+1): every c_l is an integer, and for the
  // supported degree range it stays far below 2^53, so small-degree values
  // at integer arguments come out bit-exact.
  double coeff = 1.0;
  std::complex<double> acc{0.0, 0.0};
  for (int l = 0; l <= lmax; ++l) {
    const double sign = (l % 2 == 0) ? 1.0 : -1.0;
    acc += sign * coeff * xp[m - l] * yp[n - l];
    coeff = coeff * static_cast<double>(m - l) * static_cast<double>(n - l) /
            static_cast<double>(l + 1);
  }
  return acc;
}

}  // namespace wigner
