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

#include "transduce/analytic.hpp"

#include <cmath>
#include <string>

namespace transduce {

namespace {

constexpr Complex kI(0.0, 1.0);

double rel_diff(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

}  // namespace

double ResonantCoefficients::norm_squared() const {
  return std::norm(c_e) + std::norm(c_g) + std::norm(alpha_1) + std::norm(alpha_0);
}

ResonantCoefficients resonant_coefficients(double lambda_i, double lambda_sq, BlochAngle bloch,
                                           double t) {
  const double lt2 = lambda_i * lambda_i + lambda_sq * lambda_sq;
  if (lt2 == 0.0) {
    throw DegenerateModelError("resonant coefficients undefined for lambda_i = lambda_sq = 0");
  }
  if (t < 0.0) throw ParameterError("resonant coefficients need t >= 0");
  const double lt = std::sqrt(lt2);
  const double ce = std::cos(bloch.theta / 2.0);
  const double se = std::sin(bloch.theta / 2.0);
  const double half = std::sin(lt * t / 2.0);

  ResonantCoefficients c;
  c.lambda_tilde = lt;
  c.c_e = ce * (lambda_sq * lambda_sq * std::cos(lt * t) + lambda_i * lambda_i) / lt2;
  c.c_g = std::polar(se, bloch.phi);
  c.alpha_1 = -kI * ce * lambda_sq * std::sin(lt * t) / lt;
  c.alpha_0 = -ce * (2.0 * lambda_i * lambda_sq / lt2) * half * half;
  return c;
}

double resonant_transfer_time(double lambda_i, double lambda_sq) {
  if (lambda_i <= 0.0 || lambda_sq <= 0.0) {
    throw NoTransferTimeError("resonant transfer needs positive couplings");
  }
  if (rel_diff(lambda_i, lambda_sq) > 1e-12) {
    throw NoTransferTimeError("no real resonant transfer time for lambda_i != lambda_sq (" +
                              std::to_string(lambda_i) + " vs " + std::to_string(lambda_sq) + ")");
  }
  const double lt2 = lambda_i * lambda_i + lambda_sq * lambda_sq;
  const double lt = std::sqrt(lt2);
  // (λ̃⁴ / 4λ_i²λ_sq²)^{1/4} ≥ 1 with equality iff the couplings match.
  double arg = std::pow(lt2 * lt2 / (4.0 * lambda_i * lambda_i * lambda_sq * lambda_sq), 0.25);
  arg = std::min(arg, 1.0);
  return 2.0 / lt * std::asin(arg);
}

double DispersiveCoefficients::norm_squared() const {
  double sum = 0.0;
  for (const auto& tr : per_fock) sum += std::norm(tr.c_e) + std::norm(tr.c_g) + std::norm(tr.c_s);
  return sum;
}

DispersiveCoefficients dispersive_coefficients(double chi, BlochAngle bloch,
                                               const Vector& fock_amplitudes, double t) {
  if (fock_amplitudes.size() == 0 || std::abs(fock_amplitudes.norm() - 1.0) > 1e-10) {
    throw ParameterError("resonator amplitudes are not normalized");
  }
  const double ce = std::cos(bloch.theta / 2.0);
  const double se = std::sin(bloch.theta / 2.0);
  const Complex rot = std::exp(-2.0 * kI * chi * t);

  DispersiveCoefficients out;
  out.per_fock.reserve(static_cast<std::size_t>(fock_amplitudes.size()));
  for (Eigen::Index n = 0; n < fock_amplitudes.size(); ++n) {
    const Complex an = fock_amplitudes(n);
    DispersiveCoefficients::Triple tr;
    tr.c_e = 0.5 * an * (rot + 1.0) * ce;
    tr.c_g = an * std::exp(2.0 * kI * static_cast<double>(n) * chi * t) * std::polar(se, bloch.phi);
    tr.c_s = 0.5 * an * (rot - 1.0) * ce;
    out.per_fock.push_back(tr);
  }
  return out;
}

double dispersive_transfer_time(double chi) {
  if (chi == 0.0 || !std::isfinite(chi)) {
    throw ConfigError("dispersive transfer time needs a finite nonzero chi");
  }
  return kPi / (2.0 * std::abs(chi));
}

Vector resonant_state(const ResonantCoefficients& c, const HilbertLayout& layout) {
  Vector psi = Vector::Zero(layout.total_dim());
  psi(layout.index(AtomLevel::R, 0, QubitLevel::Excited)) = c.c_e;
  psi(layout.index(AtomLevel::R, 0, QubitLevel::Ground)) = c.c_g;
  psi(layout.index(AtomLevel::R, 1, QubitLevel::Ground)) = c.alpha_1;
  psi(layout.index(AtomLevel::S, 0, QubitLevel::Ground)) = c.alpha_0;
  return psi;
}

Vector dispersive_state(const DispersiveCoefficients& c, const HilbertLayout& layout) {
  if (static_cast<int>(c.per_fock.size()) > layout.fock_dim()) {
    throw LayoutError("dispersive coefficients exceed the Fock cutoff");
  }
  Vector psi = Vector::Zero(layout.total_dim());
  for (std::size_t n = 0; n < c.per_fock.size(); ++n) {
    const int k = static_cast<int>(n);
    psi(layout.index(AtomLevel::R, k, QubitLevel::Excited)) = c.per_fock[n].c_e;
    psi(layout.index(AtomLevel::R, k, QubitLevel::Ground)) = c.per_fock[n].c_g;
    psi(layout.index(AtomLevel::S, k, QubitLevel::Ground)) = c.per_fock[n].c_s;
  }
  return psi;
}

Vector ideal_laser_rotation(const Vector& atom) {
  if (atom.size() != kAtomDim) throw LayoutError("laser rotation acts on 4 atomic amplitudes");
  Vector out = Vector::Zero(kAtomDim);
  out(index_of(AtomLevel::E)) = -kI * atom(index_of(AtomLevel::S));
  out(index_of(AtomLevel::G)) = kI * atom(index_of(AtomLevel::R));
  // The pulses leave no amplitude in the Rydberg manifold, and |g⟩,|e⟩ start empty.
  return out;
}

Vector ideal_final_state(ProtocolKind kind, BlochAngle bloch) {
  // Rydberg-manifold state at the end of stage 1 (resonator in vacuum, qubit in |g̃⟩),
  // then the ideal laser stage.
  Vector rydberg = Vector::Zero(kAtomDim);
  if (kind == ProtocolKind::Resonant) {
    const double lambda = 1.0;
    const auto c = resonant_coefficients(lambda, lambda, bloch, resonant_transfer_time(lambda, lambda));
    rydberg(index_of(AtomLevel::R)) = c.c_g;
    rydberg(index_of(AtomLevel::S)) = c.alpha_0;
  } else {
    const double chi = 1.0;
    Vector vacuum = basis_vector(1, 0);
    const auto c = dispersive_coefficients(chi, bloch, vacuum, dispersive_transfer_time(chi));
    rydberg(index_of(AtomLevel::R)) = c.per_fock[0].c_g;
    rydberg(index_of(AtomLevel::S)) = c.per_fock[0].c_s;
  }
  return ideal_laser_rotation(rydberg);
}

Complex protocol_ground_phase(ProtocolKind kind) {
  const Vector v = ideal_final_state(kind, BlochAngle{kPi / 2.0, 0.0});
  const Complex ratio = v(index_of(AtomLevel::G)) / v(index_of(AtomLevel::E));
  return ratio / std::abs(ratio);
}

ParityCheck parity_factorization_check(const Vector& fock_amplitudes) {
  if (fock_amplitudes.size() == 0 || std::abs(fock_amplitudes.norm() - 1.0) > 1e-10) {
    throw ParameterError("resonator amplitudes are not normalized");
  }
  bool odd_empty = true;
  bool even_empty = true;
  for (Eigen::Index n = 0; n < fock_amplitudes.size(); ++n) {
    if (std::abs(fock_amplitudes(n)) > 1e-12) {
      (n % 2 == 0 ? even_empty : odd_empty) = false;
    }
  }
  ParityCheck out;
  out.parity = odd_empty ? Parity::Even : even_empty ? Parity::Odd : Parity::Mixed;
  out.factorizable = out.parity != Parity::Mixed;
  return out;
}

}  // namespace transduce
