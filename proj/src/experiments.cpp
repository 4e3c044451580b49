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

#include "transduce/experiments.hpp"

#include <cmath>
#include <string>
#include <tuple>

#include "transduce/parallel.hpp"

namespace transduce {

namespace {

Vector qubit_amplitudes(BlochAngle bloch) {
  Vector sq(kQubitDim);
  sq(index_of(QubitLevel::Ground)) = std::polar(std::sin(bloch.theta / 2.0), bloch.phi);
  sq(index_of(QubitLevel::Excited)) = std::cos(bloch.theta / 2.0);
  return sq;
}

ResonatorInit default_init(const ModelParams& params) {
  return params.nbar > 0.0 ? ResonatorInit::thermal(params.nbar) : ResonatorInit::vacuum();
}

void require_axis(const std::vector<double>& axis, const char* name) {
  if (axis.empty()) throw ParameterError(std::string(name) + " axis is empty");
  for (std::size_t i = 1; i < axis.size(); ++i) {
    if (!(axis[i] > axis[i - 1])) {
      throw ParameterError(std::string(name) + " axis must be strictly increasing");
    }
  }
}

}  // namespace

IntegratorConfig integrator_config(const ModelParams& params, const SolverOptions& options) {
  IntegratorConfig config = integrator_config_for(params);
  config.rel_tol = options.rel_tol;
  config.abs_tol = options.abs_tol;
  config.max_step *= options.max_step_scale;
  return config;
}

DensityMatrix initial_state(const ModelParams& params, BlochAngle bloch, const ResonatorInit& init) {
  const Vector sq = qubit_amplitudes(bloch);
  switch (init.kind) {
    case ResonatorInit::Kind::Vacuum:
      return pure_state(AtomLevel::R, basis_vector(params.fock_dim, 0), sq);
    case ResonatorInit::Kind::Pure:
      if (init.amplitudes.size() != params.fock_dim) {
        throw LayoutError("resonator amplitudes must have fock_dim entries");
      }
      return pure_state(AtomLevel::R, init.amplitudes, sq);
    case ResonatorInit::Kind::Thermal: {
      const Vector r = basis_vector(kAtomDim, index_of(AtomLevel::R));
      return product_state(DensityMatrix(Matrix(r * r.adjoint())), thermal_state(init.nbar, params.fock_dim),
                           DensityMatrix(Matrix(sq * sq.adjoint())));
    }
  }
  throw ParameterError("unknown resonator initialization");
}

TrajectoryRecord run_dynamics(const ModelParams& params, ProtocolKind kind, BlochAngle bloch,
                              const ResonatorInit& init, const SolverOptions& options,
                              double sample_dt) {
  params.validate();
  const ProtocolSchedule schedule = make_schedule(params, kind);
  const ModulatedHamiltonian h = protocol_hamiltonian(params, schedule);
  const DensityMatrix rho0 = initial_state(params, bloch, init);
  const TargetState target = target_state(bloch, frame_for(kind));
  IntegratorConfig config = integrator_config(params, options);
  config.sample_dt = sample_dt;
  if (!params.dissipative()) return evolve_von_neumann(h, rho0, schedule, target, config);
  return evolve_lindblad(h, collapse_operators(params), rho0, schedule, target, config);
}

double final_fidelity(const ModelParams& params, ProtocolKind kind, BlochAngle bloch,
                      const ResonatorInit& init, const SolverOptions& options) {
  params.validate();
  const ProtocolSchedule schedule = make_schedule(params, kind);
  const ModulatedHamiltonian h = protocol_hamiltonian(params, schedule);
  const DensityMatrix rho0 = initial_state(params, bloch, init);
  const TargetState target = target_state(bloch, frame_for(kind));
  IntegratorConfig config = integrator_config(params, options);
  if (!params.dissipative() && init.kind != ResonatorInit::Kind::Thermal) {
    // A pure state under unitary evolution stays pure: propagate the ket.
    const Vector res = init.kind == ResonatorInit::Kind::Pure ? init.amplitudes : basis_vector(params.fock_dim, 0);
    const Vector psi0 = product_ket(basis_vector(kAtomDim, index_of(AtomLevel::R)), res, qubit_amplitudes(bloch));
    const Vector psi = propagate_state(h, psi0, 0.0, schedule.total(), config);
    const DensityMatrix rho(params.layout(), psi * psi.adjoint());
    return fidelity(partial_trace(rho, Subsystem::Atom), target);
  }
  config.record_samples = false;
  const TrajectoryRecord rec =
      params.dissipative()
          ? evolve_lindblad(h, collapse_operators(params), rho0, schedule, target, config)
          : evolve_von_neumann(h, rho0, schedule, target, config);
  return rec.fidelity.back();
}

std::vector<double> linear_axis(double lo, double hi, int points) {
  if (points < 1) throw ParameterError("axis needs at least one point");
  if (points == 1) return {lo};
  std::vector<double> axis(static_cast<std::size_t>(points));
  for (int k = 0; k < points; ++k) {
    axis[static_cast<std::size_t>(k)] = k == points - 1 ? hi : lo + (hi - lo) * k / (points - 1);
  }
  return axis;
}

SweepGrid SweepGrid::bloch(int theta_steps, int phi_steps) {
  SweepGrid g;
  g.scenario = "bloch";
  g.theta_steps = theta_steps;
  g.phi_steps = phi_steps;
  return g;
}

SweepGrid SweepGrid::heatmap(std::vector<double> lambda_axis, std::vector<double> omega_axis) {
  SweepGrid g;
  g.scenario = "heatmap";
  g.lambda_axis = std::move(lambda_axis);
  g.omega_axis = std::move(omega_axis);
  return g;
}

SweepGrid SweepGrid::thermal(std::vector<double> nbar_list, std::vector<double> lambda_axis) {
  SweepGrid g;
  g.scenario = "thermal";
  g.nbar_list = std::move(nbar_list);
  g.lambda_axis = std::move(lambda_axis);
  return g;
}

double SweepGrid::theta(int i) const {
  return theta_steps <= 1 ? 0.0 : kPi * static_cast<double>(i) / (theta_steps - 1);
}

double SweepGrid::phi(int j) const {
  return kTwoPi * static_cast<double>(j) / phi_steps;
}

SweepShape shape_of(const SweepGrid& grid) {
  if (grid.theta_steps > 0 || grid.phi_steps > 0) return SweepShape::Bloch;
  if (!grid.nbar_list.empty()) return SweepShape::Thermal;
  return SweepShape::Heatmap;
}

std::size_t SweepGrid::size() const {
  switch (shape_of(*this)) {
    case SweepShape::Bloch:
      return static_cast<std::size_t>(theta_steps) * static_cast<std::size_t>(phi_steps);
    case SweepShape::Heatmap:
      return lambda_axis.size() * omega_axis.size();
    case SweepShape::Thermal:
      return nbar_list.size() * lambda_axis.size();
  }
  return 0;
}

void SweepGrid::validate() const {
  switch (shape_of(*this)) {
    case SweepShape::Bloch:
      if (theta_steps < 1 || phi_steps < 1) throw ParameterError("Bloch grid needs theta_steps, phi_steps >= 1");
      break;
    case SweepShape::Heatmap:
      require_axis(lambda_axis, "lambda");
      require_axis(omega_axis, "omega");
      break;
    case SweepShape::Thermal:
      require_axis(lambda_axis, "lambda");
      for (double n : nbar_list) {
        if (!(n >= 0.0)) throw ParameterError("nbar values must be >= 0");
      }
      break;
  }
}

std::pair<double, double> SweepResult::coordinates(std::size_t index) const {
  switch (shape_of(grid)) {
    case SweepShape::Bloch: {
      const auto cols = static_cast<std::size_t>(grid.phi_steps);
      return {grid.theta(static_cast<int>(index / cols)), grid.phi(static_cast<int>(index % cols))};
    }
    case SweepShape::Heatmap: {
      const std::size_t cols = grid.omega_axis.size();
      return {grid.lambda_axis[index / cols], grid.omega_axis[index % cols]};
    }
    case SweepShape::Thermal: {
      const std::size_t cols = grid.lambda_axis.size();
      return {grid.nbar_list[index / cols], grid.lambda_axis[index % cols]};
    }
  }
  return {0.0, 0.0};
}

SweepSummary summarize(const SweepResult& result, bool find_max) {
  if (result.values.empty()) throw ParameterError("cannot summarize an empty sweep");
  SweepSummary s;
  s.is_max = find_max;
  s.index = 0;
  for (std::size_t i = 1; i < result.values.size(); ++i) {
    const double v = result.values[i];
    const double best = result.values[s.index];
    if (find_max ? v > best : v < best) s.index = i;
  }
  s.value = result.values[s.index];
  std::tie(s.x, s.y) = result.coordinates(s.index);
  return s;
}

SweepResult bloch_sweep(const ModelParams& params, ProtocolKind kind, const SweepGrid& grid,
                        const SolverOptions& options) {
  params.validate();
  grid.validate();
  if (shape_of(grid) != SweepShape::Bloch) throw ParameterError("bloch_sweep needs a Bloch grid");
  if (params.dissipative()) throw ConfigError("Bloch sweeps are defined for the ideal protocol");
  make_schedule(params, kind);  // surface configuration errors before spawning work

  SweepResult result;
  result.grid = grid;
  result.values.assign(grid.size(), 0.0);
  const auto cols = static_cast<std::size_t>(grid.phi_steps);
  const ResonatorInit init = default_init(params);
  parallel_for(grid.size(), options.workers, [&](std::size_t idx) {
    const BlochAngle bloch{grid.theta(static_cast<int>(idx / cols)), grid.phi(static_cast<int>(idx % cols))};
    result.values[idx] = final_fidelity(params, kind, bloch, init, options);
  });
  result.summary = summarize(result, false);
  return result;
}

SweepResult noise_heatmap(const ModelParams& base_rates, ProtocolKind kind, BlochAngle bloch,
                          const SweepGrid& grid, const SolverOptions& options,
                          double delta_over_lambda) {
  base_rates.validate();
  grid.validate();
  if (shape_of(grid) != SweepShape::Heatmap) throw ParameterError("noise_heatmap needs a (lambda, omega) grid");
  if (!(base_rates.kappa > 0.0)) throw ConfigError("noise heatmap axes are in units of kappa; kappa must be > 0");

  SweepResult result;
  result.grid = grid;
  result.values.assign(grid.size(), 0.0);
  const std::size_t cols = grid.omega_axis.size();
  const ResonatorInit init = default_init(base_rates);
  parallel_for(grid.size(), options.workers, [&](std::size_t idx) {
    ModelParams p = base_rates;
    p.lambda_i = p.lambda_sq = grid.lambda_axis[idx / cols] * base_rates.kappa;
    p.omega = grid.omega_axis[idx % cols] * base_rates.kappa;
    p.omega_tilde = 3.0 * p.omega;
    p.delta = kind == ProtocolKind::Dispersive ? delta_over_lambda * p.lambda_i : 0.0;
    result.values[idx] = final_fidelity(p, kind, bloch, init, options);
  });
  result.summary = summarize(result, true);
  return result;
}

SweepResult thermal_sweep(const ModelParams& base_rates, ProtocolKind kind, BlochAngle bloch,
                          const SweepGrid& grid, const SolverOptions& options,
                          double omega_over_lambda, double delta_over_lambda) {
  base_rates.validate();
  grid.validate();
  if (shape_of(grid) != SweepShape::Thermal) throw ParameterError("thermal_sweep needs an (nbar, lambda) grid");
  if (!(base_rates.kappa > 0.0)) throw ConfigError("thermal sweep axis is in units of kappa; kappa must be > 0");

  SweepResult result;
  result.grid = grid;
  result.values.assign(grid.size(), 0.0);
  const std::size_t cols = grid.lambda_axis.size();
  parallel_for(grid.size(), options.workers, [&](std::size_t idx) {
    ModelParams p = base_rates;
    p.nbar = grid.nbar_list[idx / cols];
    p.lambda_i = p.lambda_sq = grid.lambda_axis[idx % cols] * base_rates.kappa;
    p.omega = omega_over_lambda * p.lambda_i;
    p.omega_tilde = 3.0 * p.omega;
    p.delta = kind == ProtocolKind::Dispersive ? delta_over_lambda * p.lambda_i : 0.0;
    result.values[idx] = final_fidelity(p, kind, bloch, ResonatorInit::thermal(p.nbar), options);
  });
  result.summary = summarize(result, true);
  return result;
}

}  // namespace transduce
