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

#pragma once

// Run configuration: a flat `key = value` text file plus `--set` overrides.
// Frequencies are written as ordinary frequencies (MHz or kHz, named by the
// key suffix) and stored internally as angular frequencies in rad/µs.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "transduce/experiments.hpp"

namespace transduce {

enum class Command { Dynamics, BlochSweep, NoiseHeatmap, ThermalSweep, Validate };

// Throws ConfigError for anything but the five command names.
Command parse_command(std::string_view name);
std::string_view to_string(Command command);

struct RunConfig {
  Command command = Command::Dynamics;
  // Normalized user-facing values, one entry per key that was set. This is
  // what gets echoed next to the results.
  std::map<std::string, std::string> entries;

  ProtocolKind kind = ProtocolKind::Resonant;
  ModelParams params;
  BlochAngle bloch;
  SweepGrid grid;
  SolverOptions solver;
  double omega_over_lambda = 3.0;  // thermal sweeps
  double delta_over_lambda = 12.0;  // heatmaps and thermal sweeps
  int samples = 400;                // dynamics output points

  std::string out_dir;

  friend bool operator==(const RunConfig& a, const RunConfig& b) {
    return a.command == b.command && a.entries == b.entries && a.kind == b.kind && a.params == b.params && a.solver.workers == b.solver.workers &&
           a.out_dir == b.out_dir;
  }
};

// Every key the parser accepts.
const std::vector<std::string>& known_keys();

// Parses config text; `overrides` are "key=value" strings applied on top.
// Throws ConfigError on unknown or duplicated keys, malformed values and
// missing required keys, ParameterError on negative rates, LayoutError on
// fock_dim < 2.
RunConfig parse_config_text(Command command, const std::string& text,
                            const std::vector<std::string>& overrides = {});

// Reads the file, then as parse_config_text. Throws IoError if unreadable.
RunConfig parse_config(Command command, const std::string& path,
                       const std::vector<std::string>& overrides = {});

// Config text that parses back to an identical RunConfig.
std::string emit_config(const RunConfig& config);

}  // namespace transduce
