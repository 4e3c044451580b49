// Copyright 2026 The Transduce Authors
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

#include "transduce/output.hpp"

#include <cstdio>
#include <fstream>
#include <system_error>

#include "transduce/errors.hpp"

namespace transduce {

namespace {

std::string header(const std::vector<std::string>& columns) {
  std::string out;
  for (std::size_t i = 0; i < columns.size(); ++i) out += (i ? "," : "") + columns[i];
  return out + "\n";
}

void append_row(std::string& out, std::initializer_list<double> values) {
  bool first = true;
  for (double v : values) {
    if (!first) out += ',';
    out += format_number(v);
    first = false;
  }
  out += '\n';
}

}  // namespace

std::string format_number(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

const std::vector<std::string>& dynamics_columns() {
  static const std::vector<std::string> cols = {"t_us", "fidelity", "n_mean", "p_g", "p_e", "p_r", "p_s"};
  return cols;
}

const std::vector<std::string>& sweep_columns(SweepShape shape) {
  static const std::vector<std::string> bloch = {"theta_rad", "phi_rad", "fidelity"};
  static const std::vector<std::string> heatmap = {"lambda_over_kappa", "omega_over_kappa", "fidelity"};
  static const std::vector<std::string> thermal = {"nbar", "lambda_over_kappa", "fidelity"};
  switch (shape) {
    case SweepShape::Bloch: return bloch;
    case SweepShape::Heatmap: return heatmap;
    case SweepShape::Thermal: return thermal;
  }
  return bloch;
}

const std::vector<std::string>& validation_columns() {
  static const std::vector<std::string> cols = {"property", "measured", "threshold", "passed"};
  return cols;
}

std::string dynamics_csv(const TrajectoryRecord& rec) {
  std::string out = header(dynamics_columns());
  for (std::size_t i = 0; i < rec.times.size(); ++i) {
    append_row(out, {rec.times[i], rec.fidelity[i], rec.n_mean[i], rec.p_g[i], rec.p_e[i], rec.p_r[i], rec.p_s[i]});
  }
  return out;
}

std::string sweep_csv(const SweepResult& result) {
  std::string out = header(sweep_columns(shape_of(result.grid)));
  for (std::size_t i = 0; i < result.values.size(); ++i) {
    const auto [x, y] = result.coordinates(i);
    append_row(out, {x, y, result.values[i]});
  }
  return out;
}

std::string validation_csv(const ValidationReport& report) {
  std::string out = header(validation_columns());
  for (const PropertyCheck& c : report.checks) {
    out += c.name + "," + format_number(c.measured) + "," + format_number(c.threshold) + "," +
           (c.passed ? "true" : "false") + "\n";
  }
  return out;
}

void write_text_file(const std::filesystem::path& path, const std::string& contents) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  if (ec) throw IoError("cannot create directory '" + path.parent_path().string() + "': " + ec.message());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << contents;
  out.flush();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace transduce
