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

// Time evolution of the composite system: von Neumann and Lindblad master
// equations, integrated with an adaptive Dormand–Prince 5(4) scheme on the
// flattened density matrix. Integration spans are split exactly at every
// laser switch-on time so the step discontinuity never falls inside a step.

#include <cstddef>
#include <string>
#include <vector>

#include "transduce/hilbert.hpp"
#include "transduce/metrics.hpp"
#include "transduce/model.hpp"

namespace transduce {

struct IntegratorConfig {
  double rel_tol = 1e-8;
  double abs_tol = 1e-10;
  // Largest allowed step, µs. Zero means "resolve the fastest explicit
  // modulation of the generator with 20 steps per period" and nothing else.
  double max_step = 0.0;
  // Output sampling interval, µs. Zero means total/400.
  double sample_dt = 0.0;
  bool record_samples = true;
  bool monitor_positivity = true;
  int max_consecutive_rejections = 60;
  long max_steps = 20'000'000;
};

// max(λ̃, Ω̃, Ω, |δ|, κ) / 2π, in MHz.
double fastest_frequency(const ModelParams& params);

// Defaults with max_step = 0.05 / fastest_frequency(params).
IntegratorConfig integrator_config_for(const ModelParams& params);

struct EvolutionDiagnostics {
  std::size_t accepted_steps = 0;
  std::size_t rejected_steps = 0;
  std::size_t rhs_evaluations = 0;
  double max_trace_error = 0.0;
  double max_hermiticity = 0.0;
  double min_eigenvalue = 1.0;
  double max_purity_drift = 0.0;  // only tracked without dissipators
  std::vector<std::string> warnings;
};

struct TrajectoryRecord {
  std::vector<double> times;
  std::vector<double> fidelity;
  std::vector<double> n_mean;
  std::vector<double> p_g;
  std::vector<double> p_e;
  std::vector<double> p_r;
  std::vector<double> p_s;
  DensityMatrix final_state;
  EvolutionDiagnostics diagnostics;
};

// ρ̇ = −i[H(t), ρ] over [0, schedule.total()].
TrajectoryRecord evolve_von_neumann(const ModulatedHamiltonian& h, const DensityMatrix& rho0,
                                    const ProtocolSchedule& schedule, const TargetState& target,
                                    const IntegratorConfig& config);

// ρ̇ = −i[H(t), ρ] + Σ_k γ_k D[L_k]ρ over [0, schedule.total()].
TrajectoryRecord evolve_lindblad(const ModulatedHamiltonian& h,
                                 const std::vector<CollapseOperator>& collapse,
                                 const DensityMatrix& rho0, const ProtocolSchedule& schedule,
                                 const TargetState& target, const IntegratorConfig& config);

// Propagate a density matrix from t0 to t1. Stats are accumulated when given.
Matrix propagate_density(const ModulatedHamiltonian& h, const std::vector<CollapseOperator>& collapse,
                         const Matrix& rho, double t0, double t1, const IntegratorConfig& config,
                         EvolutionDiagnostics* stats = nullptr);

// Schrödinger evolution of a ket, same integrator.
Vector propagate_state(const ModulatedHamiltonian& h, const Vector& psi, double t0, double t1,
                       const IntegratorConfig& config, EvolutionDiagnostics* stats = nullptr);

}  // namespace transduce
