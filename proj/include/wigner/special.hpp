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

#ifndef WIGNER_SPECIAL_HPP
#define WIGNER_SPECIAL_HPP

#include <complex>

namespace wigner {

/// ln(n!) with a cached table for small n, lgamma beyond.
double log_factorial(int n);

/// Laguerre polynomial L_n(x) by the stable upward three-term recurrence
///   (k+1) L_{k+1} = (2k+1-x) L_k - k L_{k-1}.
/// Supported for n <= 64; larger orders would need an asymptotic branch.
/// Throws std::domain_error for n < 0, n > 64, or non-finite x.
double laguerre(int n, double x);

/// Generalized Laguerre polynomial L_n^{(k)}(x) by the same recurrence with
/// shifted coefficients; valid for integer k >= -n (the recurrence holds for
/// any real upper index).  Throws std::domain_error on n < 0, k < -n, or
/// non-finite x.
double assoc_laguerre(int n, int k, double x);

/// Two-variable Hermite polynomial
///   H_{m,n}(x,y) = sum_{l=0}^{min(m,n)} (-1)^l m! n! x^{m-l} y^{n-l}
///                  / (l! (m-l)! (n-l)!),
/// the coefficient family of the generating function exp(-t t' + t x + t' y).
/// Coefficients follow the exact integer recurrence c_{l+1} = c_l
/// (m-l)(n-l)/(l+1): bit-exact at small degree, and within double range for
/// every degree this library accepts.
std::complex<double> hermite2(int m, int n, std::complex<double> x,
                              std::complex<double> y);

}  // namespace wigner

#endif  // WIGNER_SPECIAL_HPP
