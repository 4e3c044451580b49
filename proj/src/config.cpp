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

#include "transduce/config.hpp"

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "transduce/errors.hpp"

namespace transduce {

namespace {

enum class ValueType { Text, Real, NonNegative, Integer, Angle, RealList };

struct KeySpec {
  const char* name;
  ValueType type;
};

// Rates and couplings only accept non-negative values; δ keeps its sign.
constexpr KeySpec kKeys[] = {
    {"kind", ValueType::Text},
    {"lambda_mhz", ValueType::NonNegative},
    {"lambda_i_mhz", ValueType::NonNegative},
    {"lambda_sq_mhz", ValueType::NonNegative},
    {"omega_mhz", ValueType::NonNegative},
    {"omega_tilde_mhz", ValueType::NonNegative},
    {"omega_over_lambda", ValueType::NonNegative},
    {"delta_mhz", ValueType::Real},
    {"delta_over_lambda", ValueType::Real},
    {"kappa_mhz", ValueType::NonNegative},
    {"kappa_khz", ValueType::NonNegative},
    {"gamma_r_mhz", ValueType::NonNegative},
    {"gamma_r_khz", ValueType::NonNegative},
    {"gamma_s_mhz", ValueType::NonNegative},
    {"gamma_s_khz", ValueType::NonNegative},
    {"gamma_sq_mhz", ValueType::NonNegative},
    {"gamma_sq_khz", ValueType::NonNegative},
    {"gamma_phi_mhz", ValueType::NonNegative},
    {"gamma_phi_khz", ValueType::NonNegative},
    {"nbar", ValueType::NonNegative},
    {"fock_dim", ValueType::Integer},
    {"theta", ValueType::Angle},
    {"phi", ValueType::Angle},
    {"theta_steps", ValueType::Integer},
    {"phi_steps", ValueType::Integer},
    {"lambda_over_kappa_min", ValueType::NonNegative},
    {"lambda_over_kappa_max", ValueType::NonNegative},
    {"lambda_over_kappa_points", ValueType::Integer},
    {"omega_over_kappa_min", ValueType::NonNegative},
    {"omega_over_kappa_max", ValueType::NonNegative},
    {"omega_over_kappa_points", ValueType::Integer},
    {"nbar_list", ValueType::RealList},
    {"rel_tol", ValueType::NonNegative},
    {"abs_tol", ValueType::NonNegative},
    {"max_step_scale", ValueType::NonNegative},
    {"samples", ValueType::Integer},
};

const KeySpec* find_key(const std::string& key) {
  for (const KeySpec& spec : kKeys) {
    if (key == spec.name) return &spec;
  }
  return nullptr;
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::string render(double v) {
  // Shortest text that reads back to the same double.
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::optional<double> to_double(const std::string& s) {
  if (s.empty()) return std::nullopt;
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (errno != 0 || end != s.c_str() + s.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

// Plain numbers, or "pi", "k*pi", "pi/n", "k*pi/n".
std::optional<double> to_angle(const std::string& s) {
  if (auto v = to_double(s)) return v;
  const auto pos = s.find("pi");
  if (pos == std::string::npos) return std::nullopt;
  double factor = 1.0;
  double divisor = 1.0;
  const std::string head = trim(s.substr(0, pos));
  const std::string tail = trim(s.substr(pos + 2));
  if (!head.empty()) {
    if (head.back() != '*') return std::nullopt;
    auto f = to_double(trim(head.substr(0, head.size() - 1)));
    if (!f) return std::nullopt;
    factor = *f;
  }
  if (!tail.empty()) {
    if (tail.front() != '/') return std::nullopt;
    auto d = to_double(trim(tail.substr(1)));
    if (!d || *d == 0.0) return std::nullopt;
    divisor = *d;
  }
  return factor * kPi / divisor;
}

std::string normalize(const KeySpec& spec, const std::string& raw) {
  const std::string key = spec.name;
  auto bad = [&](const char* what) {
    return ConfigError("config key '" + key + "': " + what + " (got '" + raw + "')");
  };
  switch (spec.type) {
    case ValueType::Text: {
      std::string v = raw;
      std::transform(v.begin(), v.end(), v.begin(), [](unsigned char c) { return std::tolower(c); });
      if (key == "kind" && v != "resonant" && v != "dispersive") throw bad("expected resonant or dispersive");
      return v;
    }
    case ValueType::Real:
    case ValueType::NonNegative: {
      auto v = to_double(raw);
      if (!v) throw bad("expected a number");
      if (spec.type == ValueType::NonNegative && *v < 0.0) {
        throw ParameterError("config key '" + key + "' must be non-negative (got " + raw + ")");
      }
      return render(*v);
    }
    case ValueType::Integer: {
      auto v = to_double(raw);
      if (!v || *v != std::floor(*v) || std::abs(*v) > 1e9) throw bad("expected an integer");
      return std::to_string(static_cast<long>(*v));
    }
    case ValueType::Angle: {
      auto v = to_angle(raw);
      if (!v) throw bad("expected an angle in radians (number or k*pi/n)");
      return render(*v);
    }
    case ValueType::RealList: {
      std::string out;
      std::stringstream ss(raw);
      std::string item;
      while (std::getline(ss, item, ',')) {
        auto v = to_double(trim(item));
        if (!v) throw bad("expected a comma-separated list of numbers");
        if (*v < 0.0) throw ParameterError("config key '" + key + "' must be non-negative (got " + raw + ")");
        out += (out.empty() ? "" : ",") + render(*v);
      }
      if (out.empty()) throw bad("empty list");
      return out;
    }
  }
  throw bad("unsupported value");
}

void apply_line(std::map<std::string, std::string>& entries, const std::string& line, bool allow_replace,
                const std::string& where) {
  const auto eq = line.find('=');
  if (eq == std::string::npos) throw ConfigError(where + ": expected key=value, got '" + line + "'");
  const std::string key = trim(std::string_view(line).substr(0, eq));
  const std::string value = trim(std::string_view(line).substr(eq + 1));
  const KeySpec* spec = find_key(key);
  if (spec == nullptr) throw ConfigError(where + ": unknown config key '" + key + "'");
  if (!allow_replace && entries.count(key) != 0) throw ConfigError(where + ": duplicate config key '" + key + "'");
  entries[key] = normalize(*spec, value);
}

class Resolver {
 public:
  explicit Resolver(const std::map<std::string, std::string>& entries) : entries_(entries) {}

  bool has(const std::string& key) const { return entries_.count(key) != 0; }

  double real(const std::string& key, double fallback) const {
    return has(key) ? *to_double(entries_.at(key)) : fallback;
  }

  int integer(const std::string& key, int fallback) const {
    return has(key) ? std::stoi(entries_.at(key)) : fallback;
  }

  double require(const std::string& key, const std::string& why) const {
    if (!has(key)) throw ConfigError("missing required config key '" + key + "' (" + why + ")");
    return *to_double(entries_.at(key));
  }

  // Angular rate from name_mhz / name_khz, or the given default in MHz.
  double rate(const std::string& name, double default_mhz) const {
    const bool mhz = has(name + "_mhz");
    const bool khz = has(name + "_khz");
    if (mhz && khz) throw ConfigError("set only one of " + name + "_mhz and " + name + "_khz");
    if (mhz) return angular_from_mhz(real(name + "_mhz", 0.0));
    if (khz) return angular_from_khz(real(name + "_khz", 0.0));
    return angular_from_mhz(default_mhz);
  }

  void forbid(const std::string& key, const std::string& why) const {
    if (has(key)) throw ConfigError("config key '" + key + "' is not used here: " + why);
  }

  std::vector<double> list(const std::string& key, std::vector<double> fallback) const {
    if (!has(key)) return fallback;
    std::vector<double> out;
    std::stringstream ss(entries_.at(key));
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(*to_double(item));
    return out;
  }

 private:
  const std::map<std::string, std::string>& entries_;
};

RunConfig resolve(Command command, std::map<std::string, std::string> entries) {
  RunConfig cfg;
  cfg.command = command;
  cfg.entries = std::move(entries);
  const Resolver r(cfg.entries);
  const bool sweep = command == Command::NoiseHeatmap || command == Command::ThermalSweep;

  if (r.has("kind")) {
    cfg.kind = cfg.entries.at("kind") == "dispersive" ? ProtocolKind::Dispersive : ProtocolKind::Resonant;
  } else if (command != Command::Validate) {
    throw ConfigError("missing required config key 'kind' (resonant or dispersive)");
  }
  const bool dispersive = cfg.kind == ProtocolKind::Dispersive;

  ModelParams& p = cfg.params;
  // Noisy sweeps default to the baseline rates; single runs default to the ideal model.
  p.kappa = r.rate("kappa", sweep ? 1.0 : 0.0);
  p.gamma_r = r.rate("gamma_r", sweep ? 1e-3 : 0.0);
  p.gamma_s = r.rate("gamma_s", sweep ? 1e-3 : 0.0);
  p.gamma_sq = r.rate("gamma_sq", sweep ? 35e-3 : 0.0);
  p.gamma_phi = r.rate("gamma_phi", sweep ? 130e-3 : 0.0);
  p.nbar = r.real("nbar", 0.0);
  p.fock_dim = r.integer("fock_dim", command == Command::ThermalSweep ? 15 : 10);

  cfg.bloch = {r.real("theta", 0.0), r.real("phi", 0.0)};
  cfg.solver.rel_tol = r.real("rel_tol", cfg.solver.rel_tol);
  cfg.solver.abs_tol = r.real("abs_tol", cfg.solver.abs_tol);
  cfg.solver.max_step_scale = r.real("max_step_scale", 1.0);
  if (!(cfg.solver.rel_tol > 0.0) || !(cfg.solver.abs_tol > 0.0) || !(cfg.solver.max_step_scale > 0.0)) {
    throw ConfigError("rel_tol, abs_tol and max_step_scale must be positive");
  }
  cfg.samples = r.integer("samples", 400);
  if (cfg.samples < 1) throw ConfigError("samples must be >= 1");
  cfg.delta_over_lambda = r.real("delta_over_lambda", 12.0);
  cfg.omega_over_lambda = r.real("omega_over_lambda", 3.0);

  if (sweep) {
    const char* why = "the sweep sets it per grid point";
    for (const char* key : {"lambda_mhz", "lambda_i_mhz", "lambda_sq_mhz", "omega_mhz", "omega_tilde_mhz",
                            "delta_mhz"}) {
      r.forbid(key, why);
    }
    if (!(p.kappa > 0.0)) throw ConfigError("sweep axes are in units of kappa; kappa must be > 0");
    if (!dispersive && r.has("delta_over_lambda") && cfg.delta_over_lambda != 0.0) {
      throw ConfigError("delta_over_lambda must be 0 for the resonant protocol");
    }
  } else {
    if (r.has("lambda_mhz") && (r.has("lambda_i_mhz") || r.has("lambda_sq_mhz"))) {
      throw ConfigError("set either lambda_mhz or lambda_i_mhz/lambda_sq_mhz, not both");
    }
    if (r.has("lambda_mhz")) {
      p.lambda_i = p.lambda_sq = angular_from_mhz(r.real("lambda_mhz", 0.0));
    } else if (r.has("lambda_i_mhz") || r.has("lambda_sq_mhz")) {
      p.lambda_i = angular_from_mhz(r.require("lambda_i_mhz", "lambda_sq_mhz is set"));
      p.lambda_sq = angular_from_mhz(r.require("lambda_sq_mhz", "lambda_i_mhz is set"));
    } else {
      r.require("lambda_mhz", "resonator coupling");
    }

    if (r.has("omega_mhz") && r.has("omega_over_lambda")) {
      throw ConfigError("set either omega_mhz or omega_over_lambda, not both");
    }
    if (r.has("omega_mhz")) {
      p.omega = angular_from_mhz(r.real("omega_mhz", 0.0));
    } else if (r.has("omega_over_lambda")) {
      p.omega = cfg.omega_over_lambda * p.lambda_i;
    } else if (command != Command::Validate) {
      r.require("omega_mhz", "laser Rabi frequency, or give omega_over_lambda");
    }
    p.omega_tilde = r.has("omega_tilde_mhz") ? angular_from_mhz(r.real("omega_tilde_mhz", 0.0)) : 3.0 * p.omega;

    if (r.has("delta_mhz") && r.has("delta_over_lambda")) {
      throw ConfigError("set either delta_mhz or delta_over_lambda, not both");
    }
    if (r.has("delta_mhz")) {
      p.delta = angular_from_mhz(r.real("delta_mhz", 0.0));
    } else if (r.has("delta_over_lambda")) {
      p.delta = cfg.delta_over_lambda * p.lambda_i;
    }
    if (dispersive && p.delta == 0.0 && command != Command::Validate) {
      throw ConfigError("missing required config key 'delta_mhz' or 'delta_over_lambda' for the dispersive protocol");
    }
    if (!dispersive && p.delta != 0.0 && command != Command::Validate) {
      throw ConfigError("the resonant protocol needs delta = 0");
    }
  }

  switch (command) {
    case Command::BlochSweep:
      cfg.grid = SweepGrid::bloch(r.integer("theta_steps", 25), r.integer("phi_steps", 48));
      break;
    case Command::NoiseHeatmap:
      cfg.grid = SweepGrid::heatmap(
          linear_axis(r.real("lambda_over_kappa_min", 0.5), r.real("lambda_over_kappa_max", 12.0),
                      r.integer("lambda_over_kappa_points", 40)),
          linear_axis(r.real("omega_over_kappa_min", 0.5), r.real("omega_over_kappa_max", 40.0),
                      r.integer("omega_over_kappa_points", 40)));
      break;
    case Command::ThermalSweep:
      cfg.grid = SweepGrid::thermal(
          r.list("nbar_list", {0.0, 0.6}),
          linear_axis(r.real("lambda_over_kappa_min", 1.0), r.real("lambda_over_kappa_max", 12.0),
                      r.integer("lambda_over_kappa_points", 23)));
      break;
    case Command::Dynamics:
    case Command::Validate:
      break;
  }
  if (command == Command::BlochSweep || command == Command::NoiseHeatmap || command == Command::ThermalSweep) {
    cfg.grid.validate();
  }
  p.validate();
  return cfg;
}

}  // namespace

Command parse_command(std::string_view name) {
  if (name == "dynamics") return Command::Dynamics;
  if (name == "bloch-sweep") return Command::BlochSweep;
  if (name == "noise-heatmap") return Command::NoiseHeatmap;
  if (name == "thermal-sweep") return Command::ThermalSweep;
  if (name == "validate") return Command::Validate;
  throw ConfigError("unknown command '" + std::string(name) +
                    "' (expected dynamics, bloch-sweep, noise-heatmap, thermal-sweep or validate)");
}

std::string_view to_string(Command command) {
  switch (command) {
    case Command::Dynamics: return "dynamics";
    case Command::BlochSweep: return "bloch-sweep";
    case Command::NoiseHeatmap: return "noise-heatmap";
    case Command::ThermalSweep: return "thermal-sweep";
    case Command::Validate: return "validate";
  }
  return "unknown";
}

const std::vector<std::string>& known_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> out;
    for (const KeySpec& spec : kKeys) out.emplace_back(spec.name);
    return out;
  }();
  return keys;
}

RunConfig parse_config_text(Command command, const std::string& text, const std::vector<std::string>& overrides) {
  std::map<std::string, std::string> entries;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    apply_line(entries, line, false, "line " + std::to_string(lineno));
  }
  for (const std::string& item : overrides) apply_line(entries, trim(item), true, "--set");
  return resolve(command, std::move(entries));
}

RunConfig parse_config(Command command, const std::string& path, const std::vector<std::string>& overrides) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_config_text(command, buf.str(), overrides);
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

std::string emit_config(const RunConfig& config) {
  std::string out = "# command: " + std::string(to_string(config.command)) + "\n";
  for (const KeySpec& spec : kKeys) {
    const auto it = config.entries.find(spec.name);
    if (it != config.entries.end()) out += it->first + " = " + it->second + "\n";
  }
  return out;
}

}  // namespace transduce
