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

#include <Eigen/Dense>

#include "transduce/hilbert.hpp"
#include "transduce/types.hpp"

namespace transduce {

// Which protocol's phase convention the target was built for. The frame is
// carried with the target so that resonant and dispersive runs never share
// a target by accident.
enum class TargetFrame { Resonant, Dispersive };

constexpr TargetFrame frame_for(ProtocolKind kind) {
  return kind == ProtocolKind::Resonant ? TargetFrame::Resonant : TargetFrame::Dispersive;
}

struct TargetState {
  Vector amplitudes;  // over g, e, r, s; r and s are exactly zero
  TargetFrame frame = TargetFrame::Resonant;
};

// cos(θ/2)|e⟩ + p·e^{iφ} sin(θ/2)|g⟩, with p the protocol's ground-state
// phase for the frame.
TargetState target_state(BlochAngle bloch, TargetFrame frame);

// √⟨t|ρ_at|t⟩ for a 4×4 atomic state.
double fidelity(const DensityMatrix& rho_atom, const TargetState& target);

struct Observables {
  double n_mean = 0.0;
  double p_g = 0.0;
  double p_e = 0.0;
  double p_r = 0.0;
  double p_s = 0.0;
  double p_g_sq = 0.0;
  double p_e_sq = 0.0;
};

Observables observables(const DensityMatrix& rho);

}  // namespace transduce
