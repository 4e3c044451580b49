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

#include "transduce/model.hpp"

#include <algorithm>
#include <cmath>

#include "transduce/analytic.hpp"

namespace transduce {

namespace {

constexpr Complex kI(0.0, 1.0);

void require_non_negative(double value, const char* name) {
  if (!(value >= 0.0) || !std::isfinite(value)) {
    throw ParameterError(std::string(name) + " must be a finite non-negative rate, got " +
                         std::to_string(value));
  }
}

bool couplings_equal(const ModelParams& p) {
  const double scale = std::max(std::abs(p.lambda_i), std::abs(p.lambda_sq));
  return scale == 0.0 || std::abs(p.lambda_i - p.lambda_sq) <= 1e-12 * scale;
}

CompositeOperator atom_op(AtomLevel to, AtomLevel from, const HilbertLayout& layout) {
  return embed(atom_transition(to, from), Subsystem::Atom, layout);
}

CompositeOperator qubit_op(QubitLevel to, QubitLevel from, const HilbertLayout& layout) {
  return embed(qubit_transition(to, from), Subsystem::SQubit, layout);
}

CompositeOperator resonator_a(const HilbertLayout& layout) {
  return embed(annihilation(layout.fock_dim()), Subsystem::Resonator, layout);
}

// a†(|r⟩⟨s| + |g̃⟩⟨ẽ|): the raising half of the equal-coupling exchange term.
CompositeOperator exchange_raising(const HilbertLayout& layout) {
  const CompositeOperator ad = resonator_a(layout).adjoint();
  return ad * (atom_op(AtomLevel::R, AtomLevel::S, layout) +
               qubit_op(QubitLevel::Ground, QubitLevel::Excited, layout));
}

}  // namespace

void ModelParams::validate() const {
  require_non_negative(lambda_i, "lambda_i");
  require_non_negative(lambda_sq, "lambda_sq");
  require_non_negative(omega, "omega");
  require_non_negative(omega_tilde, "omega_tilde");
  require_non_negative(kappa, "kappa");
  require_non_negative(gamma_r, "gamma_r");
  require_non_negative(gamma_s, "gamma_s");
  require_non_negative(gamma_sq, "gamma_sq");
  require_non_negative(gamma_phi, "gamma_phi");
  require_non_negative(nbar, "nbar");
  if (!std::isfinite(delta)) throw ParameterError("delta must be finite");
  if (fock_dim < 2) throw LayoutError("fock_dim must be >= 2, got " + std::to_string(fock_dim));
}

double ModelParams::lambda_tilde() const {
  return std::sqrt(lambda_i * lambda_i + lambda_sq * lambda_sq);
}

bool ModelParams::dissipative() const {
  return kappa > 0.0 || gamma_r > 0.0 || gamma_s > 0.0 || gamma_sq > 0.0 || gamma_phi > 0.0;
}

void ModulatedHamiltonian::add(CompositeOperator op, double frequency, double switch_on) {
  if (!(op.layout() == layout_)) throw LayoutError("term lives on a different layout");
  terms_.push_back(Term{std::move(op), frequency, switch_on});
}

CompositeOperator ModulatedHamiltonian::at(double t) const {
  Matrix sum = Matrix::Zero(layout_.total_dim(), layout_.total_dim());
  for (const Term& term : terms_) {
    if (t < term.switch_on) continue;
    if (term.frequency == 0.0) {
      sum += term.op.matrix();
    } else {
      sum += std::exp(kI * term.frequency * t) * term.op.matrix();
    }
  }
  return {layout_, std::move(sum)};
}

std::vector<double> ModulatedHamiltonian::switch_times() const {
  std::vector<double> out;
  for (const Term& term : terms_) {
    if (std::isfinite(term.switch_on)) out.push_back(term.switch_on);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

double ModulatedHamiltonian::max_frequency() const {
  double f = 0.0;
  for (const Term& term : terms_) f = std::max(f, std::abs(term.frequency));
  return f;
}

CompositeOperator h_resonant(const ModelParams& params) {
  const HilbertLayout layout = params.layout();
  const CompositeOperator a = resonator_a(layout);
  const CompositeOperator ad = a.adjoint();
  CompositeOperator h = params.lambda_i * (ad * atom_op(AtomLevel::R, AtomLevel::S, layout) +
                                           a * atom_op(AtomLevel::S, AtomLevel::R, layout));
  h += params.lambda_sq * (ad * qubit_op(QubitLevel::Ground, QubitLevel::Excited, layout) +
                           a * qubit_op(QubitLevel::Excited, QubitLevel::Ground, layout));
  return h;
}

CompositeOperator h_laser(const ModelParams& params) {
  const HilbertLayout layout = params.layout();
  CompositeOperator h = params.omega * (atom_op(AtomLevel::E, AtomLevel::S, layout) +
                                        atom_op(AtomLevel::S, AtomLevel::E, layout));
  h += params.omega_tilde * (atom_op(AtomLevel::R, AtomLevel::G, layout) +
                             atom_op(AtomLevel::G, AtomLevel::R, layout));
  return h;
}

CompositeOperator h_dispersive_full(const ModelParams& params, double t) {
  if (!couplings_equal(params)) {
    throw ConfigError("dispersive Hamiltonian assumes lambda_i = lambda_sq");
  }
  const CompositeOperator x = exchange_raising(params.layout());
  const Complex phase = std::exp(kI * params.delta * t);
  return params.lambda_i * (phase * x + std::conj(phase) * x.adjoint());
}

double dispersive_chi(const ModelParams& params) {
  if (params.delta == 0.0) throw ConfigError("dispersive protocol needs a nonzero detuning");
  if (!couplings_equal(params)) {
    throw ConfigError("dispersive protocol assumes lambda_i = lambda_sq");
  }
  return params.lambda_i * params.lambda_i / params.delta;
}

CompositeOperator h_dispersive_effective(const ModelParams& params) {
  const double chi = dispersive_chi(params);
  const HilbertLayout layout = params.layout();
  const CompositeOperator a = resonator_a(layout);
  const CompositeOperator ad = a.adjoint();
  const CompositeOperator n = ad * a;
  const CompositeOperator n1 = a * ad;
  const CompositeOperator ps = atom_op(AtomLevel::S, AtomLevel::S, layout);
  const CompositeOperator pr = atom_op(AtomLevel::R, AtomLevel::R, layout);
  const CompositeOperator pe = qubit_op(QubitLevel::Excited, QubitLevel::Excited, layout);
  const CompositeOperator pg = qubit_op(QubitLevel::Ground, QubitLevel::Ground, layout);

  CompositeOperator h = ps * n1 - pr * n + pe * n1 - pg * n;
  h += atom_op(AtomLevel::R, AtomLevel::S, layout) * qubit_op(QubitLevel::Excited, QubitLevel::Ground, layout);
  h += atom_op(AtomLevel::S, AtomLevel::R, layout) * qubit_op(QubitLevel::Ground, QubitLevel::Excited, layout);
  return chi * h;
}

ModulatedHamiltonian protocol_hamiltonian(const ModelParams& params, const ProtocolSchedule& schedule) {
  const HilbertLayout layout = params.layout();
  ModulatedHamiltonian h(layout);
  if (schedule.kind == ProtocolKind::Resonant) {
    h.add(h_resonant(params));
  } else {
    if (!couplings_equal(params)) {
      throw ConfigError("dispersive Hamiltonian assumes lambda_i = lambda_sq");
    }
    const CompositeOperator x = params.lambda_i * exchange_raising(layout);
    h.add(x, params.delta);
    h.add(x.adjoint(), -params.delta);
  }
  h.add(h_laser(params), 0.0, schedule.tau);
  return h;
}

CompositeOperator h_of_t(const ModelParams& params, const ProtocolSchedule& schedule, double t) {
  if (t < 0.0) throw ParameterError("h_of_t needs t >= 0");
  CompositeOperator h = schedule.kind == ProtocolKind::Resonant ? h_resonant(params)
                                                                : h_dispersive_full(params, t);
  if (t >= schedule.tau) h += h_laser(params);
  return h;
}

CompositeOperator excitation_number(const HilbertLayout& layout) {
  const CompositeOperator a = resonator_a(layout);
  return a.adjoint() * a + atom_op(AtomLevel::S, AtomLevel::S, layout) +
         qubit_op(QubitLevel::Excited, QubitLevel::Excited, layout);
}

std::vector<CollapseOperator> collapse_operators(const ModelParams& params) {
  params.validate();
  const HilbertLayout layout = params.layout();
  std::vector<CollapseOperator> out;
  auto push = [&](double rate, CompositeOperator op, const char* name) {
    if (rate > 0.0) out.push_back(CollapseOperator{rate, std::move(op), name});
  };
  push(params.kappa, resonator_a(layout), "kappa");
  push(params.gamma_r, atom_op(AtomLevel::G, AtomLevel::R, layout), "gamma_r");
  push(params.gamma_s, atom_op(AtomLevel::E, AtomLevel::S, layout), "gamma_s");
  push(params.gamma_sq, qubit_op(QubitLevel::Ground, QubitLevel::Excited, layout), "gamma_sq");
  push(params.gamma_phi,
       qubit_op(QubitLevel::Excited, QubitLevel::Excited, layout) -
           qubit_op(QubitLevel::Ground, QubitLevel::Ground, layout),
       "gamma_phi");
  return out;
}

Matrix dissipator(const Matrix& op, const Matrix& rho) {
  const Matrix opd = op.adjoint();
  const Matrix n = opd * op;
  return op * rho * opd - 0.5 * (n * rho + rho * n);
}

ProtocolSchedule make_schedule(const ModelParams& params, ProtocolKind kind) {
  params.validate();
  ProtocolSchedule s;
  s.kind = kind;
  if (kind == ProtocolKind::Resonant) {
    s.tau = resonant_transfer_time(params.lambda_i, params.lambda_sq);
  } else {
    s.tau = dispersive_transfer_time(dispersive_chi(params));
  }
  if (params.omega <= 0.0) throw ConfigError("laser stage needs omega > 0");
  s.pulse = kPi / (2.0 * params.omega);
  return s;
}

}  // namespace transduce
