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

// Acceptance suite. Each test case checks one end-to-end criterion against
// reference numbers and prints a single PASS/FAIL line with what it measured.
// Run one criterion with `acceptance -tc="<name>"`.

#include <doctest.h>

#include <algorithm>
#include <chrono>
#include <cstdarg>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "transduce/experiments.hpp"
#include "transduce/validation.hpp"

using namespace transduce;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Collects the sub-checks of one criterion and prints the verdict line.
class Criterion {
 public:
  explicit Criterion(std::string name) : name_(std::move(name)) {}

  void expect(bool ok, const char* fmt, ...) __attribute__((format(printf, 3, 4))) {
    char buf[512];
    va_list args;
    va_start(args, fmt);
    std::vsnprintf(buf, sizeof buf, fmt, args);
    va_end(args);
    parts_.push_back(std::string(ok ? "" : "[x] ") + buf);
    ok_ = ok_ && ok;
    CHECK_MESSAGE(ok, name_ << ": " << buf);
  }

  ~Criterion() {
    std::string line = (ok_ ? "PASS " : "FAIL ") + name_ + ":";
    for (const auto& p : parts_) line += " " + p + ";";
    std::printf("%s\n", line.c_str());
    std::fflush(stdout);
  }

 private:
  std::string name_;
  std::vector<std::string> parts_;
  bool ok_ = true;
};

bool within(double value, double expected, double tol) { return std::abs(value - expected) <= tol; }

ModelParams ideal(double omega_over_lambda, double delta_over_lambda = 0.0) {
  ModelParams p;
  p.lambda_i = p.lambda_sq = angular_from_mhz(8.0);
  p.omega = omega_over_lambda * p.lambda_i;
  p.omega_tilde = 3.0 * p.omega;
  p.delta = delta_over_lambda * p.lambda_i;
  return p;
}

ModelParams baseline_rates(int fock_dim = 10) {
  ModelParams p;
  p.kappa = angular_from_mhz(1.0);
  p.gamma_r = p.gamma_s = angular_from_khz(1.0);
  p.gamma_sq = angular_from_khz(35.0);
  p.gamma_phi = angular_from_khz(130.0);
  p.fock_dim = fock_dim;
  return p;
}

// Baseline rates with λ = l·κ, Ω = o·κ, Ω̃ = 3Ω and δ = 12λ when dispersive.
ModelParams noisy_point(ProtocolKind kind, double l, double o, int fock_dim = 10) {
  ModelParams p = baseline_rates(fock_dim);
  p.lambda_i = p.lambda_sq = l * p.kappa;
  p.omega = o * p.kappa;
  p.omega_tilde = 3.0 * p.omega;
  if (kind == ProtocolKind::Dispersive) p.delta = 12.0 * p.lambda_i;
  return p;
}

const BlochAngle kUp{0.0, 0.0};
const BlochAngle kEquator{kPi / 2.0, 0.0};

}  // namespace

TEST_CASE("resonant Bloch minima") {
  Criterion c("resonant Bloch minima");
  const std::vector<std::pair<double, double>> cases{{0.6, 0.58}, {1.0, 0.86}, {3.0, 0.986}, {4.0, 0.995}};
  for (const auto& [ratio, expected] : cases) {
    const auto start = Clock::now();
    const SweepResult r = bloch_sweep(ideal(ratio), ProtocolKind::Resonant, SweepGrid::bloch(25, 48));
    const double elapsed = seconds_since(start);
    c.expect(within(r.summary.value, expected, 0.01), "Omega/lambda=%g F_min=%.4f (want %.3f +- 0.01)", ratio,
             r.summary.value, expected);
    c.expect(elapsed < 300.0, "Omega/lambda=%g runtime %.1f s (< 300 s)", ratio, elapsed);
  }
}

TEST_CASE("dispersive Bloch minima") {
  Criterion c("dispersive Bloch minima");
  for (const auto& [dol, expected] : std::vector<std::pair<double, double>>{{6.0, 0.96}, {12.0, 0.99}}) {
    const auto start = Clock::now();
    const SweepResult r = bloch_sweep(ideal(0.6, dol), ProtocolKind::Dispersive, SweepGrid::bloch(25, 48));
    c.expect(within(r.summary.value, expected, 0.01), "delta/lambda=%g F_min=%.4f (want %.2f +- 0.01, %.1f s)", dol,
             r.summary.value, expected, seconds_since(start));
  }
}

TEST_CASE("dynamics endpoints") {
  Criterion c("dynamics endpoints");
  struct Case {
    BlochAngle bloch;
    double ratio, p_e, p_e_tol, f, f_tol;
    const char* label;
  };
  const std::vector<Case> cases{
      {kUp, 3.0, 0.972, 0.005, 0.986, 0.005, "theta=0 Omega/lambda=3"},
      {kEquator, 0.6, 0.168, 0.01, 0.818, 0.01, "theta=pi/2 Omega/lambda=0.6"},
      {kEquator, 3.0, 0.468, 0.005, 0.993, 0.005, "theta=pi/2 Omega/lambda=3"},
  };
  for (const Case& k : cases) {
    const TrajectoryRecord rec = run_dynamics(ideal(k.ratio), ProtocolKind::Resonant, k.bloch, ResonatorInit::vacuum());
    const double p_e = rec.p_e.back();
    const double f = rec.fidelity.back();
    c.expect(within(p_e, k.p_e, k.p_e_tol), "%s P_e=%.4f (want %.3f +- %g)", k.label, p_e, k.p_e, k.p_e_tol);
    c.expect(within(f, k.f, k.f_tol), "%s F=%.4f (want %.3f +- %g)", k.label, f, k.f, k.f_tol);
  }
  for (double ratio : {0.6, 3.0}) {
    const TrajectoryRecord rec = run_dynamics(ideal(ratio), ProtocolKind::Resonant, kUp, ResonatorInit::vacuum());
    double worst = 0.0;
    for (std::size_t i = 0; i < rec.times.size(); ++i) {
      worst = std::max(worst, std::abs(rec.fidelity[i] - std::sqrt(std::max(rec.p_e[i], 0.0))));
    }
    c.expect(worst <= 1e-6, "theta=0 Omega/lambda=%g max|F - sqrt(P_e)|=%.1e (<= 1e-6)", ratio, worst);
  }
}

TEST_CASE("noisy heatmap peaks") {
  Criterion c("noisy heatmap peaks");
  // Peaks are read along an exact Ω/κ = 5 column of the standard λ/κ axis.
  const SweepGrid column = SweepGrid::heatmap(linear_axis(0.5, 12.0, 40), {5.0});
  struct Case {
    ProtocolKind kind;
    BlochAngle bloch;
    double f, at, at_tol;
    const char* label;
  };
  const std::vector<Case> cases{
      {ProtocolKind::Resonant, kUp, 0.85, 3.0, 1.0, "resonant theta=0"},
      {ProtocolKind::Dispersive, kUp, 0.93, 10.0, 2.0, "dispersive theta=0"},
      {ProtocolKind::Resonant, kEquator, 0.94, 2.8, 1.0, "resonant theta=pi/2"},
      {ProtocolKind::Dispersive, kEquator, 0.94, 10.0, 2.0, "dispersive theta=pi/2"},
  };
  for (const Case& k : cases) {
    const SweepResult r = noise_heatmap(baseline_rates(), k.kind, k.bloch, column);
    c.expect(within(r.summary.value, k.f, 0.02) && within(r.summary.x, k.at, k.at_tol),
             "%s F_max=%.4f at lambda/kappa=%.3f (want %.2f +- 0.02 at %.1f +- %.0f)", k.label, r.summary.value,
             r.summary.x, k.f, k.at, k.at_tol);
  }

  // Full-map runtime: time a stratified 5×5 subsample of the 40×40 grid on
  // one worker and scale to 1600 points spread over 8 workers.
  const auto lambda_axis = linear_axis(0.5, 12.0, 40);
  const auto omega_axis = linear_axis(0.5, 40.0, 40);
  std::vector<double> ls, os;
  for (int i : {3, 11, 19, 27, 35}) {
    ls.push_back(lambda_axis[i]);
    os.push_back(omega_axis[i]);
  }
  for (ProtocolKind kind : {ProtocolKind::Resonant, ProtocolKind::Dispersive}) {
    const auto start = Clock::now();
    noise_heatmap(baseline_rates(), kind, kUp, SweepGrid::heatmap(ls, os));
    const double sample = seconds_since(start);
    const double projected = sample * (1600.0 / 25.0) / 8.0;
    c.expect(projected < 900.0, "%s 40x40 map projected %.0f s at 8 workers (< 900 s; 25-point sample %.1f s)",
             std::string(to_string(kind)).c_str(), projected, sample);
  }
}

TEST_CASE("thermal behaviour") {
  Criterion c("thermal behaviour");
  const SweepGrid grid = SweepGrid::thermal({0.0, 0.6}, linear_axis(1.0, 12.0, 23));
  const std::size_t n = grid.lambda_axis.size();
  auto degradation = [&](ProtocolKind kind, BlochAngle bloch) {
    const SweepResult r = thermal_sweep(baseline_rates(15), kind, bloch, grid, {}, 3.0, 12.0);
    std::vector<double> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = r.values[i] - r.values[n + i];
    return d;
  };

  const auto disp_up = degradation(ProtocolKind::Dispersive, kUp);
  const double worst_disp = *std::max_element(disp_up.begin(), disp_up.end());
  c.expect(worst_disp < 0.02, "(a) dispersive theta=0 max degradation %.4f (< 0.02)", worst_disp);

  const auto res_up = degradation(ProtocolKind::Resonant, kUp);
  const double worst_res = *std::max_element(res_up.begin(), res_up.end());
  c.expect(worst_res > 0.05, "(b) resonant theta=0 max degradation %.4f (> 0.05)", worst_res);

  const auto disp_eq = degradation(ProtocolKind::Dispersive, kEquator);
  bool monotone = true;
  for (std::size_t i = n / 2; i + 1 < n; ++i) monotone = monotone && disp_eq[i + 1] > disp_eq[i];
  c.expect(monotone, "(c) dispersive theta=pi/2 degradation rises over lambda/kappa %.2f..%.0f: %.4f -> %.4f",
           grid.lambda_axis[n / 2], grid.lambda_axis[n - 1], disp_eq[n / 2], disp_eq[n - 1]);
}

TEST_CASE("oracle equivalence") {
  Criterion c("oracle equivalence");
  const auto start = Clock::now();
  ModelParams p = ideal(3.0);
  const PropertyCheck res = resonant_oracle_check(p, 100, 11);
  p.delta = 12.0 * p.lambda_i;
  const PropertyCheck disp = dispersive_oracle_check(p, 100, 12);
  const double elapsed = seconds_since(start);
  c.expect(res.measured <= 1e-8, "resonant max amplitude error %.1e (<= 1e-8)", res.measured);
  c.expect(disp.measured <= 1e-8, "dispersive max amplitude error %.1e (<= 1e-8)", disp.measured);
  c.expect(elapsed < 30.0, "runtime %.1f s (< 30 s)", elapsed);
}

TEST_CASE("physics invariants") {
  Criterion c("physics invariants");

  // Constructed states.
  const DensityCheck start = check_density(initial_state(baseline_rates(15), kEquator, ResonatorInit::thermal(0.6)));
  c.expect(start.ok(1e-10, 1e-8, 1e-8), "thermal initial state trace err %.1e, herm %.1e, min eig %.1e",
           start.trace_error, start.hermiticity, start.min_eigenvalue);

  // Noisy trajectories, both protocols, thermal resonator.
  for (ProtocolKind kind : {ProtocolKind::Resonant, ProtocolKind::Dispersive}) {
    const ModelParams p = noisy_point(kind, kind == ProtocolKind::Resonant ? 3.0 : 10.0, 5.0, 12);
    const TrajectoryRecord rec = run_dynamics(p, kind, kEquator, ResonatorInit::thermal(0.6));
    const auto& d = rec.diagnostics;
    c.expect(d.max_trace_error <= 1e-8 && d.max_hermiticity <= 1e-10 && d.min_eigenvalue >= -1e-7,
             "%s noisy trajectory trace err %.1e, herm %.1e, min eig %.1e", std::string(to_string(kind)).c_str(),
             d.max_trace_error, d.max_hermiticity, d.min_eigenvalue);
  }

  // Closed evolution keeps the state pure.
  for (ProtocolKind kind : {ProtocolKind::Resonant, ProtocolKind::Dispersive}) {
    const ModelParams p = kind == ProtocolKind::Resonant ? ideal(3.0) : ideal(0.6, 12.0);
    const TrajectoryRecord rec = run_dynamics(p, kind, kEquator, ResonatorInit::vacuum());
    c.expect(rec.diagnostics.max_purity_drift <= 1e-7, "%s ideal purity drift %.1e (<= 1e-7)",
             std::string(to_string(kind)).c_str(), rec.diagnostics.max_purity_drift);
  }

  const PropertyCheck nexc = excitation_conservation_check(ideal(3.0));
  c.expect(nexc.measured <= 1e-8, "N_exc drift over stage 1 %.1e (<= 1e-8)", nexc.measured);
  const PropertyCheck phase = dissipator_phase_check(10, 7);
  c.expect(phase.measured <= 1e-12, "|D[e^{ia}a] - D[a]| %.1e (<= 1e-12)", phase.measured);
  const PropertyCheck decay = cavity_decay_check(angular_from_mhz(1.0));
  c.expect(decay.measured <= 1e-6, "cavity decay law error %.1e (<= 1e-6)", decay.measured);
  const PropertyCheck deph = dephasing_check(angular_from_khz(130.0));
  c.expect(deph.measured <= 1e-6, "dephasing law error %.1e (<= 1e-6)", deph.measured);
}

TEST_CASE("convergence") {
  Criterion c("convergence");
  const SolverOptions options;
  struct Case {
    ModelParams params;
    ProtocolKind kind;
    const char* label;
  };
  const std::vector<Case> cases{
      {ideal(3.0), ProtocolKind::Resonant, "resonant ideal"},
      {ideal(0.6, 12.0), ProtocolKind::Dispersive, "dispersive ideal"},
      {noisy_point(ProtocolKind::Resonant, 3.0, 5.0), ProtocolKind::Resonant, "resonant noisy"},
      {noisy_point(ProtocolKind::Dispersive, 10.0, 5.0), ProtocolKind::Dispersive, "dispersive noisy"},
  };
  for (const Case& k : cases) {
    const auto fock = fock_convergence_check(k.params, k.kind, kEquator, ResonatorInit::vacuum(), options, 1e-6);
    const auto step = step_convergence_check(k.params, k.kind, kEquator, ResonatorInit::vacuum(), options, 1e-6);
    c.expect(fock.measured < 1e-6, "%s vacuum Fock doubling %.1e (< 1e-6)", k.label, fock.measured);
    c.expect(step.measured < 1e-6, "%s vacuum step halving %.1e (< 1e-6)", k.label, step.measured);

    ModelParams warm = k.params;
    warm.fock_dim = 15;
    const ResonatorInit thermal = ResonatorInit::thermal(0.6);
    const auto tf = fock_convergence_check(warm, k.kind, kEquator, thermal, options, 1e-3);
    const auto ts = step_convergence_check(warm, k.kind, kEquator, thermal, options, 1e-3);
    c.expect(tf.measured < 1e-3, "%s thermal Fock doubling %.1e (< 1e-3)", k.label, tf.measured);
    c.expect(ts.measured < 1e-3, "%s thermal step halving %.1e (< 1e-3)", k.label, ts.measured);
  }
}
