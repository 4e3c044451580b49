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

#include <doctest.h>

#include <cmath>

#include "support.hpp"
#include "transduce/evolve.hpp"
#include "transduce/experiments.hpp"
#include "transduce/validation.hpp"

using namespace transduce;

namespace {

ModelParams small_params(double omega_over_lambda = 3.0) {
  ModelParams p;
  p.lambda_i = p.lambda_sq = angular_from_mhz(8.0);
  p.omega = omega_over_lambda * p.lambda_i;
  p.omega_tilde = 3.0 * p.omega;
  p.fock_dim = 4;
  return p;
}

}  // namespace

TEST_CASE("a zero Hamiltonian leaves the state alone") {
  const HilbertLayout layout(3);
  ModulatedHamiltonian h(layout);
  h.add(CompositeOperator::zero(layout));
  std::mt19937_64 rng(5);
  const Matrix rho = testing::random_density(layout.total_dim(), rng);
  const Matrix out = propagate_density(h, {}, rho, 0.0, 2.0, IntegratorConfig{});
  CHECK(testing::max_abs(out - rho) < 1e-14);
}

TEST_CASE("decay laws") {
  SUBCASE("cavity decay") {
    const auto c = cavity_decay_check(angular_from_mhz(1.0));
    CHECK(c.measured <= 1e-6);
    CHECK(c.passed);
  }
  SUBCASE("qubit dephasing") {
    const auto c = dephasing_check(angular_from_khz(130.0));
    CHECK(c.measured <= 1e-6);
    CHECK(c.passed);
  }
}

TEST_CASE("chained propagation equals one call") {
  ModelParams p = small_params();
  CHECK(split_consistency_check(p, ProtocolKind::Resonant).measured <= 1e-9);
  p.delta = 12.0 * p.lambda_i;
  p.omega = 0.6 * p.lambda_i;
  p.omega_tilde = 3.0 * p.omega;
  CHECK(split_consistency_check(p, ProtocolKind::Dispersive).measured <= 1e-9);
}

TEST_CASE("Lindblad with no collapse operators is von Neumann") {
  ModelParams p = small_params();
  CHECK(lindblad_reduction_check(p, ProtocolKind::Resonant, {1.0, 0.4}).measured <= 1e-8);
  p.delta = 12.0 * p.lambda_i;
  p.omega = 0.6 * p.lambda_i;
  p.omega_tilde = 3.0 * p.omega;
  CHECK(lindblad_reduction_check(p, ProtocolKind::Dispersive, {2.0, 1.1}).measured <= 1e-8);
}

TEST_CASE("trajectories stay physical") {
  ModelParams p = small_params();
  p.kappa = angular_from_mhz(1.0);
  p.gamma_r = p.gamma_s = angular_from_khz(1.0);
  p.gamma_sq = angular_from_khz(35.0);
  p.gamma_phi = angular_from_khz(130.0);
  p.fock_dim = 5;

  const TrajectoryRecord rec = run_dynamics(p, ProtocolKind::Resonant, {kPi / 2.0, 0.3}, ResonatorInit::thermal(0.6));
  const auto& d = rec.diagnostics;
  CHECK(d.max_trace_error <= 1e-8);
  CHECK(d.max_hermiticity <= 1e-10);
  CHECK(d.min_eigenvalue >= -1e-8);

  const DensityCheck last = check_density(rec.final_state);
  CHECK(last.ok());

  REQUIRE(rec.times.size() >= 2);
  const std::size_t n = rec.times.size();
  CHECK(rec.fidelity.size() == n);
  CHECK(rec.n_mean.size() == n);
  CHECK(rec.p_s.size() == n);
  CHECK(rec.times.front() == 0.0);
  const ProtocolSchedule s = make_schedule(p, ProtocolKind::Resonant);
  CHECK(rec.times.back() == doctest::Approx(s.total()).epsilon(1e-12));
  for (std::size_t k = 0; k < n; ++k) {
    if (k > 0) CHECK(rec.times[k] > rec.times[k - 1]);
    CHECK(rec.fidelity[k] >= -1e-9);
    CHECK(rec.fidelity[k] <= 1.0 + 1e-9);
    CHECK(rec.n_mean[k] >= -1e-9);
    CHECK(std::abs(rec.p_g[k] + rec.p_e[k] + rec.p_r[k] + rec.p_s[k] - 1.0) < 1e-7);
  }
  CHECK(rec.p_r.front() == doctest::Approx(1.0));
}

TEST_CASE("excitation number is conserved by the resonant stage") {
  const auto c = excitation_conservation_check(small_params());
  CHECK(c.measured <= 1e-8);
}

TEST_CASE("halving the step cap barely moves the result") {
  const auto c = step_convergence_check(small_params(), ProtocolKind::Resonant, {kPi / 2.0, 0.0},
                                        ResonatorInit::vacuum(), SolverOptions{}, 1e-7);
  CHECK(c.measured <= 1e-7);
}

TEST_CASE("ket and density propagation agree") {
  const ModelParams p = small_params(0.6);
  const ProtocolSchedule s = make_schedule(p, ProtocolKind::Resonant);
  const ModulatedHamiltonian h = protocol_hamiltonian(p, s);
  const IntegratorConfig config = integrator_config_for(p);

  Vector sq(2);
  sq << std::polar(std::sin(0.6), 0.9), std::cos(0.6);
  const Vector psi0 = product_ket(basis_vector(4, index_of(AtomLevel::R)), basis_vector(4, 0), sq);
  const Vector psi = propagate_state(h, psi0, 0.0, s.total(), config);
  const Matrix rho = propagate_density(h, {}, psi0 * psi0.adjoint(), 0.0, s.total(), config);
  CHECK(psi.norm() == doctest::Approx(1.0).epsilon(1e-7));
  CHECK(testing::max_abs(rho - psi * psi.adjoint()) < 1e-7);
}

TEST_CASE("bad spans are rejected") {
  const ModelParams p = small_params();
  const ModulatedHamiltonian h = protocol_hamiltonian(p, make_schedule(p, ProtocolKind::Resonant));
  const Matrix rho = Matrix::Identity(p.layout().total_dim(), p.layout().total_dim()) / double(p.layout().total_dim());
  CHECK_THROWS(propagate_density(h, {}, rho, 1.0, 0.0, integrator_config_for(p)));
  CHECK_THROWS(propagate_density(h, {}, Matrix::Identity(3, 3), 0.0, 1.0, integrator_config_for(p)));
}
