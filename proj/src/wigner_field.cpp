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

#include "wigner/wigner_field.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <string_view>

#include <nlohmann/json.hpp>

namespace wigner {

namespace {

[[noreturn]] void bad_grid(const std::string& text) {
  throw std::invalid_argument("grid '" + text +
                              "' is not XMIN:XMAX:NX[,YMIN:YMAX:NY]");
}

struct Axis {
  double lo, hi;
  int n;
};

Axis parse_axis(const std::string& part, const std::string& whole) {
  const size_t c1 = part.find(':');
  const size_t c2 = part.find(':', c1 == std::string::npos ? c1 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos ||
      part.find(':', c2 + 1) != std::string::npos) {
    bad_grid(whole);
  }
  Axis ax;
  try {
    size_t used = 0;
    const std::string lo_s = part.substr(0, c1);
    const std::string hi_s = part.substr(c1 + 1, c2 - c1 - 1);
    const std::string n_s = part.substr(c2 + 1);
    ax.lo = std::stod(lo_s, &used);
    if (used != lo_s.size()) bad_grid(whole);
    ax.hi = std::stod(hi_s, &used);
    if (used != hi_s.size()) bad_grid(whole);
    ax.n = std::stoi(n_s, &used);
    if (used != n_s.size()) bad_grid(whole);
  } catch (const std::invalid_argument&) {
    bad_grid(whole);
  } catch (const std::out_of_range&) {
    bad_grid(whole);
  }
  if (!std::isfinite(ax.lo) || !std::isfinite(ax.hi) || ax.lo >= ax.hi || ax.n < 2) {
    bad_grid(whole);
  }
  return ax;
}

}  // namespace

GridSpec parse_grid(const std::string& text) {
  const size_t comma = text.find(',');
  if (text.find(',', comma == std::string::npos ? comma : comma + 1) !=
      std::string::npos) {
    bad_grid(text);
  }
  const Axis x = parse_axis(comma == std::string::npos ? text : text.substr(0, comma),
                            text);
  const Axis y = comma == std::string::npos ? x : parse_axis(text.substr(comma + 1), text);
  GridSpec g;
  g.x_min = x.lo;
  g.x_max = x.hi;
  g.nx = x.n;
  g.y_min = y.lo;
  g.y_max = y.hi;
  g.ny = y.n;
  return g;
}

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(const WignerField& field, const std::string& path) {
  if (field.values.size() != static_cast<size_t>(field.grid.points())) {
    throw std::logic_error("write_csv: value count does not match the grid");
  }
  std::ofstream ofs(path, std::ios::binary);
  if (!ofs) throw std::runtime_error("write_csv: cannot open '" + path + "'");
  ofs << "alpha_re,alpha_im,w\n";
  for (int j = 0; j < field.grid.ny; ++j) {
    const std::string y = format_g17(field.grid.y_at(j));
    for (int i = 0; i < field.grid.nx; ++i) {
      ofs << format_g17(field.grid.x_at(i)) << ',' << y << ','
          << format_g17(field.values[static_cast<size_t>(j) * field.grid.nx + i])
          << '\n';
    }
  }
  if (!ofs) throw std::runtime_error("write_csv: failed writing '" + path + "'");
}

void write_sidecar(const nlohmann::json& meta, const std::string& path) {
  std::ofstream ofs(path, std::ios::binary);
  if (!ofs) throw std::runtime_error("write_sidecar: cannot open '" + path + "'");
  ofs << meta.dump(2) << '\n';
  if (!ofs) throw std::runtime_error("write_sidecar: failed writing '" + path + "'");
}

std::string sidecar_path(const std::string& csv_path) {
  constexpr std::string_view ext = ".csv";
  if (csv_path.size() > ext.size() &&
      csv_path.compare(csv_path.size() - ext.size(), ext.size(), ext) == 0) {
    return csv_path.substr(0, csv_path.size() - ext.size()) + ".json";
  }
  return csv_path + ".json";
}

std::complex<double> parse_complex(const std::string& text) {
  const auto fail = [&text]() -> void {
    throw std::invalid_argument("'" + text + "' is not a complex literal (a, bi, a+bi)");
  };
  if (text.empty() || std::isspace(static_cast<unsigned char>(text.front()))) fail();

  const char* s = text.c_str();
  const char* const end = s + text.size();
  char* cursor = nullptr;

  // Leading number (or a bare sign followed by 'i' meaning +/-1).
  double first = std::strtod(s, &cursor);
  bool have_first = cursor != s;
  if (!have_first) {
    const bool neg = *s == '-';
    if (*s == '+' || *s == '-') ++s;
    if (*s == 'i' && s + 1 == end) return {0.0, neg ? -1.0 : 1.0};
    fail();
  }
  if (!std::isfinite(first)) fail();
  if (cursor == end) return {first, 0.0};
  if (*cursor == 'i') {
    if (cursor + 1 != end) fail();
    return {0.0, first};
  }
  if (*cursor != '+' && *cursor != '-') fail();

  // Imaginary trailer: sign, optional magnitude, mandatory 'i'.
  const char* im_start = cursor;
  double second = std::strtod(im_start, &cursor);
  if (cursor == im_start) {  // "+i" / "-i"
    second = *im_start == '-' ? -1.0 : 1.0;
    cursor = const_cast<char*>(im_start) + 1;
  }
  if (*cursor != 'i' || cursor + 1 != end) fail();
  if (!std::isfinite(first) || !std::isfinite(second)) fail();
  return {first, second};
}

}  // namespace wigner
