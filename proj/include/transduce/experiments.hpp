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

// Scenario runners behind each reproduced figure: single trajectories,
// Bloch-sphere sweeps, noisy (λ, Ω) heatmaps and thermal comparisons.
// Grid points run on a bounded worker pool and land in a pre-sized table
// keyed by grid index, so output never depends on completion order.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "transduce/evolve.hpp"
#include "transduce/model.hpp"

namespace transduce {

struct ResonatorInit {
  enum class Kind { Vacuum, Thermal, Pure };

  Kind kind = Kind::Vacuum;
  double nbar = 0.0;
  Vector amplitudes;

  static ResonatorInit vacuum() { return {}; }
  static ResonatorInit thermal(double nbar) { return {Kind::Thermal, nbar, {}}; }
  static ResonatorInit pure(Vector amplitudes) { return {Kind::Pure, 0.0, std::move(amplitudes)}; }
};

struct SolverOptions {
  double rel_tol = 1e-8;
  double abs_tol = 1e-10;
  double max_step_scale = 1.0;  // multiplies the default 0.05/f_max cap
  int workers = 1;
};

IntegratorConfig integrator_config(const ModelParams& params, const SolverOptions& options);

// Atom in |r⟩, resonator as requested, qubit in the Bloch state.
DensityMatrix initial_state(const ModelParams& params, BlochAngle bloch, const ResonatorInit& init);

// Full protocol trajectory. Uses the von Neumann engine when every rate is
// zero and the Lindblad engine otherwise.
TrajectoryRecord run_dynamics(const ModelParams& params, ProtocolKind kind, BlochAngle bloch,
                              const ResonatorInit& init, const SolverOptions& options = {},
                              double sample_dt = 0.0);

// Fidelity at t = τ + T without intermediate sampling.
double final_fidelity(const ModelParams& params, ProtocolKind kind, BlochAngle bloch,
                      const ResonatorInit& init, const SolverOptions& options = {});

// n evenly spaced points from lo to hi inclusive.
std::vector<double> linear_axis(double lo, double hi, int points);

struct SweepGrid {
  std::string scenario;
  int theta_steps = 0;
  int phi_steps = 0;
  std::vector<double> lambda_axis;  // λ/κ
  std::vector<double> omega_axis;   // Ω/κ
  std::vector<double> nbar_list;

  static SweepGrid bloch(int theta_steps = 25, int phi_steps = 48);
  static SweepGrid heatmap(std::vector<double> lambda_axis, std::vector<double> omega_axis);
  static SweepGrid thermal(std::vector<double> nbar_list, std::vector<double> lambda_axis);

  // θ covers [0, π] inclusive, φ covers [0, 2π) half-open.
  double theta(int i) const;
  double phi(int j) const;

  std::size_t size() const;
  // Throws ParameterError on empty or non-increasing axes.
  void validate() const;
};

struct SweepSummary {
  bool is_max = false;
  double value = 0.0;
  std::size_t index = 0;
  // Grid coordinates of the extremum: (θ, φ), (λ/κ, Ω/κ) or (n̄, λ/κ).
  double x = 0.0;
  double y = 0.0;
};

struct SweepResult {
  SweepGrid grid;
  // Row-major: θ then φ; λ then Ω; n̄ then λ.
  std::vector<double> values;
  SweepSummary summary;

  // Coordinates of a flat index, as in SweepSummary.
  std::pair<double, double> coordinates(std::size_t index) const;
};

enum class SweepShape { Bloch, Heatmap, Thermal };
SweepShape shape_of(const SweepGrid& grid);

// First minimum / maximum over the stored values.
SweepSummary summarize(const SweepResult& result, bool find_max);

// Ideal-protocol fidelity over the Bloch sphere; reports F_min.
// Throws ConfigError if params carry dissipation.
SweepResult bloch_sweep(const ModelParams& params, ProtocolKind kind, const SweepGrid& grid,
                        const SolverOptions& options = {});

// Noisy final fidelity over (λ/κ, Ω/κ) with Ω̃ = 3Ω and, for the dispersive
// protocol, δ = delta_over_lambda · λ. Reports F_max.
SweepResult noise_heatmap(const ModelParams& base_rates, ProtocolKind kind, BlochAngle bloch,
                          const SweepGrid& grid, const SolverOptions& options = {},
                          double delta_over_lambda = 12.0);

// Noisy final fidelity vs λ/κ for each n̄, with Ω = omega_over_lambda · λ.
SweepResult thermal_sweep(const ModelParams& base_rates, ProtocolKind kind, BlochAngle bloch,
                          const SweepGrid& grid, const SolverOptions& options = {},
                          double omega_over_lambda = 3.0, double delta_over_lambda = 12.0);

}  // namespace transduce
