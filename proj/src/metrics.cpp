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

#include "transduce/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "transduce/analytic.hpp"

namespace transduce {

TargetState target_state(BlochAngle bloch, TargetFrame frame) {
  const ProtocolKind kind =
      frame == TargetFrame::Resonant ? ProtocolKind::Resonant : ProtocolKind::Dispersive;
  const Complex ground_phase = frame == TargetFrame::Resonant ? Complex(1.0, 0.0)
                                                              : protocol_ground_phase(kind);
  TargetState t;
  t.frame = frame;
  t.amplitudes = Vector::Zero(kAtomDim);
  t.amplitudes(index_of(AtomLevel::E)) = std::cos(bloch.theta / 2.0);
  t.amplitudes(index_of(AtomLevel::G)) = ground_phase * std::polar(std::sin(bloch.theta / 2.0), bloch.phi);
  return t;
}

double fidelity(const DensityMatrix& rho_atom, const TargetState& target) {
  if (rho_atom.dim() != kAtomDim) throw LayoutError("fidelity needs the 4x4 atomic state");
  const double overlap = (target.amplitudes.adjoint() * rho_atom.matrix() * target.amplitudes)(0, 0).real();
  // Rounding can push a vanishing overlap a hair below zero.
  return std::sqrt(std::max(overlap, 0.0));
}

Observables observables(const DensityMatrix& rho) {
  if (!rho.layout()) throw LayoutError("observables need a full-layout density matrix");
  const HilbertLayout& layout = *rho.layout();
  Observables o;
  const Matrix& m = rho.matrix();
  for (int a = 0; a < kAtomDim; ++a) {
    for (int n = 0; n < layout.fock_dim(); ++n) {
      for (int q = 0; q < kQubitDim; ++q) {
        const double p = m(layout.index(a, n, q), layout.index(a, n, q)).real();
        o.n_mean += n * p;
        switch (a) {
          case index_of(AtomLevel::G): o.p_g += p; break;
          case index_of(AtomLevel::E): o.p_e += p; break;
          case index_of(AtomLevel::R): o.p_r += p; break;
          default: o.p_s += p; break;
        }
        (q == index_of(QubitLevel::Ground) ? o.p_g_sq : o.p_e_sq) += p;
      }
    }
  }
  return o;
}

}  // namespace transduce
