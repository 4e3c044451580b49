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

#include "transduce/run.hpp"

#include <cstdio>
#include <nlohmann/json.hpp>

#include "transduce/analytic.hpp"
#include "transduce/errors.hpp"
#include "transduce/output.hpp"

namespace transduce {

namespace {

using Json = nlohmann::ordered_json;

std::string printf_string(const char* format, double a, double b = 0.0, double c = 0.0) {
  char buf[200];
  std::snprintf(buf, sizeof buf, format, a, b, c);
  return buf;
}

Json conventions(ProtocolKind kind) {
  const Complex phase = protocol_ground_phase(kind);
  return Json{
      {"target_frame", std::string(to_string(kind))},
      {"ground_phase", {{"re", phase.real()}, {"im", phase.imag()}}},
      {"target", "cos(theta/2)|e> + ground_phase * exp(i phi) sin(theta/2)|g>"},
      {"fidelity", "sqrt(<target|rho_atom|target>)"},
      {"config_frequency_units", "MHz or kHz of ordinary frequency"},
      {"internal_frequency_units", "rad/us"},
      {"time_units", "us"},
  };
}

Json params_json(const ModelParams& p) {
  return Json{
      {"lambda_i", p.lambda_i},   {"lambda_sq", p.lambda_sq}, {"omega", p.omega},
      {"omega_tilde", p.omega_tilde}, {"delta", p.delta},     {"kappa", p.kappa},
      {"gamma_r", p.gamma_r},     {"gamma_s", p.gamma_s},     {"gamma_sq", p.gamma_sq},
      {"gamma_phi", p.gamma_phi}, {"nbar", p.nbar},           {"fock_dim", p.fock_dim},
  };
}

Json extremum_json(const SweepResult& result) {
  const auto& cols = sweep_columns(shape_of(result.grid));
  const SweepSummary& s = result.summary;
  return Json{
      {s.is_max ? "F_max" : "F_min", s.value},
      {"index", s.index},
      {"location", {{cols[0], s.x}, {cols[1], s.y}}},
  };
}

Json base_summary(const RunConfig& cfg) {
  Json params = Json::object();
  for (const auto& [k, v] : cfg.entries) params[k] = v;
  return Json{
      {"command", std::string(to_string(cfg.command))},
      {"code_version", std::string(code_version())},
      {"kind", std::string(to_string(cfg.kind))},
      {"params", params},
      {"params_rad_per_us", params_json(cfg.params)},
      {"conventions", conventions(cfg.kind)},
  };
}

}  // namespace

std::string_view code_version() {
#ifdef TRANSDUCE_VERSION
  return TRANSDUCE_VERSION;
#else
  return "unknown";
#endif
}

RunOutcome execute(const RunConfig& cfg) {
  if (cfg.out_dir.empty()) throw ConfigError("no output directory given");
  const std::filesystem::path dir(cfg.out_dir);
  RunOutcome outcome;
  Json summary = base_summary(cfg);

  auto write = [&](const std::string& name, const std::string& text) {
    write_text_file(dir / name, text);
    outcome.files.push_back(dir / name);
  };

  switch (cfg.command) {
    case Command::Dynamics: {
      const ProtocolSchedule schedule = make_schedule(cfg.params, cfg.kind);
      const ResonatorInit init =
          cfg.params.nbar > 0.0 ? ResonatorInit::thermal(cfg.params.nbar) : ResonatorInit::vacuum();
      const TrajectoryRecord rec =
          run_dynamics(cfg.params, cfg.kind, cfg.bloch, init, cfg.solver, schedule.total() / cfg.samples);
      write("dynamics.csv", dynamics_csv(rec));
      outcome.warnings = rec.diagnostics.warnings;
      summary["schedule"] = {{"tau_us", schedule.tau}, {"pulse_us", schedule.pulse}, {"total_us", schedule.total()}};
      summary["result"] = {{"fidelity", rec.fidelity.back()}, {"n_mean", rec.n_mean.back()},
                           {"p_g", rec.p_g.back()},         {"p_e", rec.p_e.back()},
                           {"p_r", rec.p_r.back()},         {"p_s", rec.p_s.back()}};
      summary["diagnostics"] = {{"accepted_steps", rec.diagnostics.accepted_steps},
                                {"rejected_steps", rec.diagnostics.rejected_steps},
                                {"max_trace_error", rec.diagnostics.max_trace_error},
                                {"max_hermiticity", rec.diagnostics.max_hermiticity},
                                {"min_eigenvalue", rec.diagnostics.min_eigenvalue},
                                {"warnings", rec.diagnostics.warnings}};
      outcome.headline = printf_string("final F = %.6f, P_e = %.6f, <n> = %.3g", rec.fidelity.back(),
                                       rec.p_e.back(), rec.n_mean.back());
      break;
    }
    case Command::BlochSweep: {
      const SweepResult res = bloch_sweep(cfg.params, cfg.kind, cfg.grid, cfg.solver);
      write("bloch.csv", sweep_csv(res));
      summary["grid"] = {{"theta_steps", cfg.grid.theta_steps}, {"phi_steps", cfg.grid.phi_steps}};
      summary["result"] = extremum_json(res);
      outcome.headline = printf_string("F_min = %.6f at theta = %.4f, phi = %.4f", res.summary.value,
                                       res.summary.x, res.summary.y);
      break;
    }
    case Command::NoiseHeatmap: {
      const SweepResult res =
          noise_heatmap(cfg.params, cfg.kind, cfg.bloch, cfg.grid, cfg.solver, cfg.delta_over_lambda);
      write("heatmap.csv", sweep_csv(res));
      summary["grid"] = {{"lambda_over_kappa", cfg.grid.lambda_axis}, {"omega_over_kappa", cfg.grid.omega_axis}};
      summary["result"] = extremum_json(res);
      outcome.headline = printf_string("F_max = %.6f at lambda/kappa = %.4g, omega/kappa = %.4g",
                                       res.summary.value, res.summary.x, res.summary.y);
      break;
    }
    case Command::ThermalSweep: {
      const SweepResult res = thermal_sweep(cfg.params, cfg.kind, cfg.bloch, cfg.grid, cfg.solver,
                                            cfg.omega_over_lambda, cfg.delta_over_lambda);
      write("thermal.csv", sweep_csv(res));
      summary["grid"] = {{"nbar", cfg.grid.nbar_list}, {"lambda_over_kappa", cfg.grid.lambda_axis}};
      summary["result"] = extremum_json(res);
      Json per_nbar = Json::array();
      const std::size_t cols = cfg.grid.lambda_axis.size();
      for (std::size_t row = 0; row < cfg.grid.nbar_list.size(); ++row) {
        std::size_t best = row * cols;
        for (std::size_t i = row * cols; i < (row + 1) * cols; ++i) {
          if (res.values[i] > res.values[best]) best = i;
        }
        per_nbar.push_back({{"nbar", cfg.grid.nbar_list[row]},
                            {"F_max", res.values[best]},
                            {"lambda_over_kappa", cfg.grid.lambda_axis[best - row * cols]}});
      }
      summary["result"]["per_nbar"] = per_nbar;
      outcome.headline = printf_string("F_max = %.6f at nbar = %.3g, lambda/kappa = %.4g", res.summary.value,
                                       res.summary.x, res.summary.y);
      break;
    }
    case Command::Validate: {
      const ValidationReport report = validate(cfg.params, cfg.bloch, cfg.solver);
      write("validation.csv", validation_csv(report));
      Json checks = Json::array();
      int failed = 0;
      for (const PropertyCheck& c : report.checks) {
        checks.push_back({{"name", c.name},
                          {"measured", c.measured},
                          {"threshold", c.threshold},
                          {"passed", c.passed},
                          {"detail", c.detail}});
        if (!c.passed) {
          ++failed;
          outcome.warnings.push_back("property " + c.name + " failed: " + format_number(c.measured) + " > " +
                                     format_number(c.threshold));
        }
      }
      summary["result"] = {{"passed", report.passed()}, {"checks", checks}};
      outcome.passed = report.passed();
      outcome.headline = printf_string("%.0f of %.0f properties passed",
                                       static_cast<double>(report.checks.size() - failed),
                                       static_cast<double>(report.checks.size()));
      break;
    }
  }

  write("summary.json", summary.dump(2) + "\n");
  write("config.echo", emit_config(cfg));
  return outcome;
}

}  // namespace transduce
