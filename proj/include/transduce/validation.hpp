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

// Self-checks of the simulator: closed-form oracles, conservation laws,
// single-dissipator decay laws and numerical convergence. Each check is a
// small standalone run so the same functions back both the `validate`
// command and the test suites.

#include <cstdint>
#include <string>
#include <vector>

#include "transduce/experiments.hpp"

namespace transduce {

struct PropertyCheck {
  std::string name;
  double measured = 0.0;
  double threshold = 0.0;
  bool passed = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<PropertyCheck> checks;
  bool passed() const;
};

// Max amplitude error of the numerical resonant stage against the closed
// form, over random (θ, φ, t) with t ∈ [0, τ_R].
PropertyCheck resonant_oracle_check(const ModelParams& params, int samples, std::uint64_t seed);

// Same for the effective dispersive generator with random resonator
// amplitudes on n ≤ 3 (fock_dim is raised to at least 5).
PropertyCheck dispersive_oracle_check(const ModelParams& params, int samples, std::uint64_t seed);

// |F_full − F_effective| at protocol end, max over a few Bloch points.
PropertyCheck effective_vs_full_check(const ModelParams& params, const SolverOptions& options);

// ⟨N_exc⟩ drift over the ideal resonant stage 1.
PropertyCheck excitation_conservation_check(const ModelParams& params);

// H = 0, κ only, resonator in |1⟩: |⟨a†a⟩(t) − e^{−κt}|.
PropertyCheck cavity_decay_check(double kappa);

// H = 0, γ_φ only: |ρ_ẽg̃(t)| against e^{−2γ_φ t}|ρ_ẽg̃(0)|.
PropertyCheck dephasing_check(double gamma_phi);

// ‖D[e^{iα}a]ρ − D[a]ρ‖ on a random state.
PropertyCheck dissipator_phase_check(int fock_dim, std::uint64_t seed);

// One-call vs chained [0, τ] + [τ, τ+T] propagation, max matrix element.
PropertyCheck split_consistency_check(const ModelParams& params, ProtocolKind kind);

// Empty-collapse Lindblad vs von Neumann on identical inputs.
PropertyCheck lindblad_reduction_check(const ModelParams& params, ProtocolKind kind, BlochAngle bloch);

// Final fidelity change when the Fock cutoff is doubled.
PropertyCheck fock_convergence_check(const ModelParams& params, ProtocolKind kind, BlochAngle bloch,
                                     const ResonatorInit& init, const SolverOptions& options,
                                     double threshold);

// Final fidelity change when max_step is halved.
PropertyCheck step_convergence_check(const ModelParams& params, ProtocolKind kind, BlochAngle bloch,
                                     const ResonatorInit& init, const SolverOptions& options,
                                     double threshold);

// Runs every check for both protocols around the given parameters. Missing
// pieces are filled in: δ = 12λ for the dispersive checks, κ = 2π·1 MHz and
// γ_φ = 2π·130 kHz for the decay laws. The effective-vs-full comparison
// always uses δ = 12λ, Ω = 0.6λ.
ValidationReport validate(const ModelParams& params, BlochAngle bloch, const SolverOptions& options);

}  // namespace transduce
