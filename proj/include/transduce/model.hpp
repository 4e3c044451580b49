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

// Interaction-picture generators, dissipators and protocol schedules.

#include <limits>
#include <string>
#include <vector>

#include "transduce/hilbert.hpp"
#include "transduce/types.hpp"

namespace transduce {

// All rates and couplings in rad/µs.
struct ModelParams {
  double lambda_i = 0.0;
  double lambda_sq = 0.0;
  double omega = 0.0;        // Ω, |s⟩ ↔ |e⟩
  double omega_tilde = 0.0;  // Ω̃, |r⟩ ↔ |g⟩
  double delta = 0.0;        // resonator detuning; 0 selects resonant physics
  double kappa = 0.0;
  double gamma_r = 0.0;
  double gamma_s = 0.0;
  double gamma_sq = 0.0;
  double gamma_phi = 0.0;
  double nbar = 0.0;
  int fock_dim = 10;

  friend bool operator==(const ModelParams&, const ModelParams&) = default;

  // Throws ParameterError for negative rates, LayoutError for fock_dim < 2.
  void validate() const;

  HilbertLayout layout() const { return HilbertLayout(fock_dim); }
  double lambda_tilde() const;
  bool dissipative() const;
};

struct ProtocolSchedule {
  ProtocolKind kind = ProtocolKind::Resonant;
  double tau = 0.0;    // stage-1 duration, µs
  double pulse = 0.0;  // laser duration T, µs

  double total() const { return tau + pulse; }
};

// H(t) = Σ_k e^{i ω_k t} u(t − t_k) O_k with u(0) = 1.
class ModulatedHamiltonian {
 public:
  struct Term {
    CompositeOperator op;
    double frequency = 0.0;
    double switch_on = -std::numeric_limits<double>::infinity();
  };

  explicit ModulatedHamiltonian(const HilbertLayout& layout) : layout_(layout) {}

  void add(CompositeOperator op, double frequency = 0.0,
           double switch_on = -std::numeric_limits<double>::infinity());

  CompositeOperator at(double t) const;

  const HilbertLayout& layout() const { return layout_; }
  const std::vector<Term>& terms() const { return terms_; }

  // Finite switch-on times, sorted and deduplicated.
  std::vector<double> switch_times() const;
  double max_frequency() const;

 private:
  HilbertLayout layout_;
  std::vector<Term> terms_;
};

CompositeOperator h_resonant(const ModelParams& params);
CompositeOperator h_laser(const ModelParams& params);

// Throws ConfigError unless λ_i = λ_sq.
CompositeOperator h_dispersive_full(const ModelParams& params, double t);

// Second-order effective generator. Validation only.
CompositeOperator h_dispersive_effective(const ModelParams& params);

// χ = λ²/δ; throws ConfigError for δ = 0 or unequal couplings.
double dispersive_chi(const ModelParams& params);

// Stage-1 generator plus the lasers switched on at schedule.tau. The
// resonator coupling stays on during the pulses.
ModulatedHamiltonian protocol_hamiltonian(const ModelParams& params, const ProtocolSchedule& schedule);
CompositeOperator h_of_t(const ModelParams& params, const ProtocolSchedule& schedule, double t);

// a†a + |s⟩⟨s| + |ẽ⟩⟨ẽ|
CompositeOperator excitation_number(const HilbertLayout& layout);

struct CollapseOperator {
  double rate = 0.0;
  CompositeOperator op;
  std::string name;
};

// κ D[a], γ_r D[|g⟩⟨r|], γ_s D[|e⟩⟨s|], γ_sq D[|g̃⟩⟨ẽ|], γ_φ D[σ̃_z]; zero rates dropped.
std::vector<CollapseOperator> collapse_operators(const ModelParams& params);

// D[O]ρ = OρO† − ½O†Oρ − ½ρO†O
Matrix dissipator(const Matrix& op, const Matrix& rho);

// Throws NoTransferTimeError (resonant, λ_i ≠ λ_sq) or ConfigError
// (δ = 0 for dispersive, Ω = 0).
ProtocolSchedule make_schedule(const ModelParams& params, ProtocolKind kind);

}  // namespace transduce
