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

#include <numbers>
#include <string_view>

namespace transduce {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Frequencies are quoted as ordinary frequencies f (X/2π = f); internally
// everything is angular, in rad/µs, with times in µs.
constexpr double angular_from_mhz(double f_mhz) { return kTwoPi * f_mhz; }
constexpr double angular_from_khz(double f_khz) { return kTwoPi * f_khz * 1e-3; }
constexpr double mhz_from_angular(double w) { return w / kTwoPi; }

// Input state of the superconducting qubit: cos(θ/2)|ẽ⟩ + e^{iφ} sin(θ/2)|g̃⟩.
struct BlochAngle {
  double theta = 0.0;
  double phi = 0.0;
};

enum class ProtocolKind { Resonant, Dispersive };

constexpr std::string_view to_string(ProtocolKind kind) {
  return kind == ProtocolKind::Resonant ? "resonant" : "dispersive";
}

}  // namespace transduce
