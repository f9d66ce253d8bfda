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

#ifndef WIGNER_WIGNER_FIELD_HPP
#define WIGNER_WIGNER_FIELD_HPP

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "wigner/types.hpp"

namespace wigner {

/// Rectangular phase-space grid specification, "XMIN:XMAX:NX[,YMIN:YMAX:NY]".
/// When the y axis is omitted it copies the x axis.
struct GridSpec {
  double x_min = -1.0, x_max = 1.0;
  double y_min = -1.0, y_max = 1.0;
  int nx = 2, ny = 2;

  double x_at(int i) const { return x_min + (x_max - x_min) * i / (nx - 1); }
  double y_at(int j) const { return y_min + (y_max - y_min) * j / (ny - 1); }
  int points() const { return nx * ny; }
};

GridSpec parse_grid(const std::string& text);

/// Sampled Wigner values over a grid; values are stored row-major with the
/// y index outermost: values[j * nx + i] = W(x_i + i y_j).
struct WignerField {
  GridSpec grid;
  std::vector<double> values;
};

/// Writes "alpha_re,alpha_im,w" rows, y-outer, every float with 17
/// significant digits (round-trip exact); byte-deterministic for a fixed
/// field.
void write_csv(const WignerField& field, const std::string& path);

/// Writes the JSON sidecar (pretty-printed, sorted keys) describing the run.
void write_sidecar(const nlohmann::json& meta, const std::string& path);

/// Sidecar path convention: foo.csv -> foo.json, anything else gets .json
/// appended.
std::string sidecar_path(const std::string& csv_path);

/// Strict "a", "bi", or "a+bi" complex literal parser (e.g. "1.0+0.5i",
/// "-2e-3i"); throws std::invalid_argument on anything it cannot read fully.
std::complex<double> parse_complex(const std::string& text);

/// Formats a double with 17 significant digits (shortest form is not used;
/// output stability across libc versions matters more than prettiness).
std::string format_g17(double v);

}  // namespace wigner

#endif  // WIGNER_WIGNER_FIELD_HPP
