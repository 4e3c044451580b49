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

// Closed-form solutions of the two ideal protocols. These are the oracle the
// numerical integrator is checked against and the source of protocol times.

#include <vector>

#include "transduce/hilbert.hpp"
#include "transduce/types.hpp"

namespace transduce {

// State at time t of the resonant stage:
//   c_e|r,0,ẽ⟩ + c_g|r,0,g̃⟩ + α₁|r,1,g̃⟩ + α₀|s,0,g̃⟩
struct ResonantCoefficients {
  Complex c_e;
  Complex c_g;
  Complex alpha_1;
  Complex alpha_0;
  double lambda_tilde = 0.0;  // √(λ_i² + λ_sq²)

  double norm_squared() const;
};

// Throws DegenerateModelError when both couplings vanish.
ResonantCoefficients resonant_coefficients(double lambda_i, double lambda_sq, BlochAngle bloch,
                                           double t);

// First time at which c_e and α₁ vanish together. Only exists for
// λ_i = λ_sq, where it equals π/(√2 λ); otherwise throws NoTransferTimeError.
double resonant_transfer_time(double lambda_i, double lambda_sq);

// Per Fock index n: c_ẽn|r,n,ẽ⟩ + c_g̃n|r,n,g̃⟩ + c_sn|s,n,g̃⟩.
struct DispersiveCoefficients {
  struct Triple {
    Complex c_e;
    Complex c_g;
    Complex c_s;
  };
  std::vector<Triple> per_fock;

  double norm_squared() const;
};

// Evolution under the effective dispersive Hamiltonian with χ = λ²/δ.
// Throws ParameterError if fock_amplitudes is not normalized.
DispersiveCoefficients dispersive_coefficients(double chi, BlochAngle bloch,
                                               const Vector& fock_amplitudes, double t);

// χτ_D = π/2. Throws ConfigError for χ = 0.
double dispersive_transfer_time(double chi);

// Assemble full kets on the given layout.
Vector resonant_state(const ResonantCoefficients& c, const HilbertLayout& layout);
Vector dispersive_state(const DispersiveCoefficients& c, const HilbertLayout& layout);

// Ideal laser stage: |s⟩ → −i|e⟩, |r⟩ → i|g⟩ (Ω T = π/2, Ω̃ T = 3π/2).
// Acts on a 4-vector of atomic amplitudes.
Vector ideal_laser_rotation(const Vector& atom_amplitudes);

// Atomic state at the end of the ideal protocol, up to the factored-out
// vacuum and |g̃⟩. Both protocols end in i[cos(θ/2)|e⟩ + e^{iφ} sin(θ/2)|g⟩].
Vector ideal_final_state(ProtocolKind kind, BlochAngle bloch);

// Relative phase the ideal protocol leaves on |g⟩ beyond e^{iφ}.
Complex protocol_ground_phase(ProtocolKind kind);

enum class Parity { Even, Odd, Mixed };

struct ParityCheck {
  bool factorizable = false;
  Parity parity = Parity::Mixed;
};

ParityCheck parity_factorization_check(const Vector& fock_amplitudes);

}  // namespace transduce
