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

#include "transduce/validation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

#include "transduce/analytic.hpp"

namespace transduce {

namespace {

std::string fmt(const char* format, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, format, a, b);
  return buf;
}

PropertyCheck finish(std::string name, double measured, double threshold, std::string detail = {}) {
  return {std::move(name), measured, threshold, measured <= threshold, std::move(detail)};
}

IntegratorConfig tight_config(const ModelParams& params) {
  IntegratorConfig config = integrator_config_for(params);
  config.rel_tol = 1e-12;
  config.abs_tol = 1e-14;
  return config;
}

ModelParams ideal(ModelParams p) {
  p.kappa = p.gamma_r = p.gamma_s = p.gamma_sq = p.gamma_phi = 0.0;
  return p;
}

Vector qubit_ket(BlochAngle bloch) {
  Vector sq(kQubitDim);
  sq(index_of(QubitLevel::Ground)) = std::polar(std::sin(bloch.theta / 2.0), bloch.phi);
  sq(index_of(QubitLevel::Excited)) = std::cos(bloch.theta / 2.0);
  return sq;
}

Vector rydberg_ket(const Vector& resonator, const Vector& sq) {
  return product_ket(basis_vector(kAtomDim, index_of(AtomLevel::R)), resonator, sq);
}

}  // namespace

bool ValidationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const PropertyCheck& c) { return c.passed; });
}

PropertyCheck resonant_oracle_check(const ModelParams& params, int samples, std::uint64_t seed) {
  const ModelParams p = ideal(params);
  const HilbertLayout layout = p.layout();
  ModulatedHamiltonian h(layout);
  h.add(h_resonant(p));
  const IntegratorConfig config = tight_config(p);
  const double tau = resonant_transfer_time(p.lambda_i, p.lambda_sq);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0.0;
  for (int k = 0; k < samples; ++k) {
    const BlochAngle bloch{kPi * unit(rng), kTwoPi * unit(rng)};
    const double t = tau * unit(rng);
    const Vector psi0 = rydberg_ket(basis_vector(layout.fock_dim(), 0), qubit_ket(bloch));
    const Vector numeric = propagate_state(h, psi0, 0.0, t, config);
    const Vector exact = resonant_state(resonant_coefficients(p.lambda_i, p.lambda_sq, bloch, t), layout);
    worst = std::max(worst, (numeric - exact).cwiseAbs().maxCoeff());
  }
  return finish("resonant_oracle", worst, 1e-8, std::to_string(samples) + " random (theta, phi, t)");
}

PropertyCheck dispersive_oracle_check(const ModelParams& params, int samples, std::uint64_t seed) {
  ModelParams p = ideal(params);
  p.fock_dim = std::max(p.fock_dim, 5);
  const HilbertLayout layout = p.layout();
  ModulatedHamiltonian h(layout);
  h.add(h_dispersive_effective(p));
  const IntegratorConfig config = tight_config(p);
  const double chi = dispersive_chi(p);
  const double tau = dispersive_transfer_time(chi);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> gauss;
  double worst = 0.0;
  for (int k = 0; k < samples; ++k) {
    const BlochAngle bloch{kPi * unit(rng), kTwoPi * unit(rng)};
    const double t = tau * unit(rng);
    Vector amps = Vector::Zero(layout.fock_dim());
    for (int n = 0; n < 4; ++n) amps(n) = Complex(gauss(rng), gauss(rng));
    amps.normalize();
    const Vector psi0 = rydberg_ket(amps, qubit_ket(bloch));
    const Vector numeric = propagate_state(h, psi0, 0.0, t, config);
    const Vector exact = dispersive_state(dispersive_coefficients(chi, bloch, amps, t), layout);
    worst = std::max(worst, (numeric - exact).cwiseAbs().maxCoeff());
  }
  return finish("dispersive_oracle", worst, 1e-8,
                std::to_string(samples) + " random (theta, phi, t, resonator state on n <= 3)");
}

PropertyCheck effective_vs_full_check(const ModelParams& params, const SolverOptions& options) {
  const ModelParams p = ideal(params);
  const ProtocolSchedule schedule = make_schedule(p, ProtocolKind::Dispersive);
  ModulatedHamiltonian h_eff(p.layout());
  h_eff.add(h_dispersive_effective(p));
  h_eff.add(h_laser(p), 0.0, schedule.tau);
  IntegratorConfig config = integrator_config(p, options);
  config.record_samples = false;

  const BlochAngle points[] = {{0.0, 0.0}, {kPi / 2.0, 0.0}, {kPi / 2.0, kPi / 2.0}, {kPi, 0.0}};
  double worst = 0.0;
  for (const BlochAngle& bloch : points) {
    const double full = final_fidelity(p, ProtocolKind::Dispersive, bloch, ResonatorInit::vacuum(), options);
    const TargetState target = target_state(bloch, TargetFrame::Dispersive);
    const auto rec = evolve_von_neumann(h_eff, initial_state(p, bloch, ResonatorInit::vacuum()), schedule,
                                        target, config);
    worst = std::max(worst, std::abs(full - rec.fidelity.back()));
  }
  return finish("effective_vs_full_gap", worst, 0.01,
                fmt("delta/lambda = %.4g, omega/lambda = %.4g", p.delta / p.lambda_i, p.omega / p.lambda_i));
}

PropertyCheck excitation_conservation_check(const ModelParams& params) {
  const ModelParams p = ideal(params);
  const HilbertLayout layout = p.layout();
  ModulatedHamiltonian h(layout);
  h.add(h_resonant(p));
  const Matrix n_exc = excitation_number(layout).matrix();
  const IntegratorConfig config = integrator_config_for(p);
  const double tau = resonant_transfer_time(p.lambda_i, p.lambda_sq);

  const BlochAngle bloch{kPi / 3.0, 0.7};
  Vector psi = rydberg_ket(basis_vector(layout.fock_dim(), 0), qubit_ket(bloch));
  const double n0 = (psi.adjoint() * n_exc * psi)(0, 0).real();
  double worst = 0.0;
  const int intervals = 50;
  for (int k = 1; k <= intervals; ++k) {
    psi = propagate_state(h, psi, tau * (k - 1) / intervals, tau * k / intervals, config);
    worst = std::max(worst, std::abs((psi.adjoint() * n_exc * psi)(0, 0).real() - n0));
  }
  return finish("excitation_conservation", worst, 1e-8, "ideal resonant stage 1");
}

PropertyCheck cavity_decay_check(double kappa) {
  ModelParams p;
  p.kappa = kappa;
  p.fock_dim = 3;
  const HilbertLayout layout = p.layout();
  const ModulatedHamiltonian h(layout);
  const auto collapse = collapse_operators(p);
  IntegratorConfig config = integrator_config_for(p);
  config.rel_tol = 1e-10;
  config.abs_tol = 1e-12;

  Matrix rho = pure_state(AtomLevel::R, basis_vector(layout.fock_dim(), 1), basis_vector(kQubitDim, 0)).matrix();
  const double horizon = 3.0 / kappa;
  const int intervals = 30;
  double worst = 0.0;
  for (int k = 1; k <= intervals; ++k) {
    const double t0 = horizon * (k - 1) / intervals;
    const double t1 = horizon * k / intervals;
    rho = propagate_density(h, collapse, rho, t0, t1, config);
    const double n = observables(DensityMatrix(layout, rho)).n_mean;
    worst = std::max(worst, std::abs(n - std::exp(-kappa * t1)));
  }
  return finish("cavity_decay_law", worst, 1e-6, fmt("kappa = %.6g rad/us over 3/kappa", kappa));
}

PropertyCheck dephasing_check(double gamma_phi) {
  ModelParams p;
  p.gamma_phi = gamma_phi;
  p.fock_dim = 2;
  const HilbertLayout layout = p.layout();
  const ModulatedHamiltonian h(layout);
  const auto collapse = collapse_operators(p);
  IntegratorConfig config = integrator_config_for(p);
  config.rel_tol = 1e-10;
  config.abs_tol = 1e-12;

  Vector sq(kQubitDim);
  sq << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  Matrix rho = pure_state(AtomLevel::R, basis_vector(layout.fock_dim(), 0), sq).matrix();
  const int e = layout.index(AtomLevel::R, 0, QubitLevel::Excited);
  const int g = layout.index(AtomLevel::R, 0, QubitLevel::Ground);
  const double c0 = std::abs(rho(e, g));
  const double horizon = 1.5 / gamma_phi;
  const int intervals = 30;
  double worst = 0.0;
  for (int k = 1; k <= intervals; ++k) {
    const double t1 = horizon * k / intervals;
    rho = propagate_density(h, collapse, rho, horizon * (k - 1) / intervals, t1, config);
    worst = std::max(worst, std::abs(std::abs(rho(e, g)) - c0 * std::exp(-2.0 * gamma_phi * t1)));
  }
  return finish("dephasing_law", worst, 1e-6, fmt("gamma_phi = %.6g rad/us over 1.5/gamma_phi", gamma_phi));
}

PropertyCheck dissipator_phase_check(int fock_dim, std::uint64_t seed) {
  const HilbertLayout layout(fock_dim);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  const int d = layout.total_dim();
  Matrix a(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) a(i, j) = Complex(gauss(rng), gauss(rng));
  }
  Matrix rho = a * a.adjoint();
  rho /= rho.trace();
  const Matrix op = embed(annihilation(fock_dim), Subsystem::Resonator, layout).matrix();
  const Matrix base = dissipator(op, rho);
  double worst = 0.0;
  for (double alpha : {0.3, 1.0, 2.5, kPi}) {
    const Matrix shifted = dissipator(std::polar(1.0, alpha) * op, rho);
    worst = std::max(worst, (shifted - base).cwiseAbs().maxCoeff());
  }
  return finish("dissipator_phase_invariance", worst, 1e-12);
}

PropertyCheck split_consistency_check(const ModelParams& params, ProtocolKind kind) {
  const ProtocolSchedule schedule = make_schedule(params, kind);
  const ModulatedHamiltonian h = protocol_hamiltonian(params, schedule);
  const auto collapse = collapse_operators(params);
  const IntegratorConfig config = integrator_config_for(params);
  const Matrix rho0 = initial_state(params, {kPi / 3.0, 0.4}, ResonatorInit::vacuum()).matrix();

  const Matrix whole = propagate_density(h, collapse, rho0, 0.0, schedule.total(), config);
  const Matrix mid = propagate_density(h, collapse, rho0, 0.0, schedule.tau, config);
  const Matrix chained = propagate_density(h, collapse, mid, schedule.tau, schedule.total(), config);
  return finish(std::string("split_consistency_") + std::string(to_string(kind)),
                (whole - chained).cwiseAbs().maxCoeff(), 1e-9);
}

PropertyCheck lindblad_reduction_check(const ModelParams& params, ProtocolKind kind, BlochAngle bloch) {
  const ModelParams p = ideal(params);
  const ProtocolSchedule schedule = make_schedule(p, kind);
  const ModulatedHamiltonian h = protocol_hamiltonian(p, schedule);
  const DensityMatrix rho0 = initial_state(p, bloch, ResonatorInit::vacuum());
  const TargetState target = target_state(bloch, frame_for(kind));
  const IntegratorConfig config = integrator_config_for(p);
  const auto a = evolve_von_neumann(h, rho0, schedule, target, config);
  const auto b = evolve_lindblad(h, {}, rho0, schedule, target, config);
  double worst = 0.0;
  for (std::size_t i = 0; i < a.fidelity.size(); ++i) {
    worst = std::max(worst, std::abs(a.fidelity[i] - b.fidelity[i]));
  }
  return finish(std::string("lindblad_reduction_") + std::string(to_string(kind)), worst, 1e-8);
}

PropertyCheck fock_convergence_check(const ModelParams& params, ProtocolKind kind, BlochAngle bloch,
                                     const ResonatorInit& init, const SolverOptions& options,
                                     double threshold) {
  ModelParams doubled = params;
  doubled.fock_dim = 2 * params.fock_dim;
  const double f1 = final_fidelity(params, kind, bloch, init, options);
  const double f2 = final_fidelity(doubled, kind, bloch, init, options);
  const char* seed = init.kind == ResonatorInit::Kind::Thermal ? "thermal" : "vacuum";
  return finish(std::string("fock_doubling_") + seed + "_" + std::string(to_string(kind)), std::abs(f1 - f2), threshold,
                fmt("fock_dim %.0f -> %.0f", params.fock_dim, doubled.fock_dim));
}

PropertyCheck step_convergence_check(const ModelParams& params, ProtocolKind kind, BlochAngle bloch,
                                     const ResonatorInit& init, const SolverOptions& options,
                                     double threshold) {
  SolverOptions halved = options;
  halved.max_step_scale = 0.5 * options.max_step_scale;
  const double f1 = final_fidelity(params, kind, bloch, init, options);
  const double f2 = final_fidelity(params, kind, bloch, init, halved);
  const char* seed = init.kind == ResonatorInit::Kind::Thermal ? "thermal" : "vacuum";
  return finish(std::string("step_halving_") + seed + "_" + std::string(to_string(kind)), std::abs(f1 - f2), threshold);
}

ValidationReport validate(const ModelParams& params, BlochAngle bloch, const SolverOptions& options) {
  params.validate();
  if (!(params.lambda_i > 0.0)) throw ParameterError("validation needs lambda > 0");

  ModelParams resonant = params;
  resonant.delta = 0.0;
  resonant.nbar = 0.0;
  if (!(resonant.omega > 0.0)) {
    resonant.omega = 3.0 * resonant.lambda_i;
    resonant.omega_tilde = 3.0 * resonant.omega;
  }
  ModelParams dispersive = resonant;
  dispersive.delta = params.delta != 0.0 ? params.delta : 12.0 * params.lambda_i;
  // The effective model is compared in the weak-laser setting; with Ω = 3λ the
  // dressed splitting Ω̃ + Ω = 12λ is resonant with δ and the effective model
  // does not apply during the pulses.
  ModelParams twelve = dispersive;
  twelve.delta = 12.0 * params.lambda_i;
  twelve.omega = 0.6 * params.lambda_i;
  twelve.omega_tilde = 3.0 * twelve.omega;

  const std::uint64_t seed = 20260101;
  ValidationReport report;
  auto& out = report.checks;
  out.push_back(resonant_oracle_check(resonant, 100, seed));
  out.push_back(dispersive_oracle_check(dispersive, 100, seed + 1));
  out.push_back(effective_vs_full_check(twelve, options));
  out.push_back(excitation_conservation_check(resonant));
  out.push_back(cavity_decay_check(params.kappa > 0.0 ? params.kappa : angular_from_mhz(1.0)));
  out.push_back(dephasing_check(params.gamma_phi > 0.0 ? params.gamma_phi : angular_from_khz(130.0)));
  out.push_back(dissipator_phase_check(4, seed + 2));

  for (const ModelParams& p : {resonant, dispersive}) {
    const ProtocolKind kind = p.delta == 0.0 ? ProtocolKind::Resonant : ProtocolKind::Dispersive;
    out.push_back(split_consistency_check(p, kind));
    out.push_back(lindblad_reduction_check(p, kind, bloch));
    out.push_back(fock_convergence_check(p, kind, bloch, ResonatorInit::vacuum(), options, 1e-6));
    out.push_back(step_convergence_check(p, kind, bloch, ResonatorInit::vacuum(), options, 1e-7));
    ModelParams warm = p;
    warm.fock_dim = std::max(p.fock_dim, 15);
    const ResonatorInit thermal = ResonatorInit::thermal(params.nbar > 0.0 ? params.nbar : 0.6);
    out.push_back(fock_convergence_check(warm, kind, bloch, thermal, options, 1e-3));
    out.push_back(step_convergence_check(warm, kind, bloch, thermal, options, 1e-3));
  }
  return report;
}

}  // namespace transduce
