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

#include <stdexcept>
#include <string>

namespace transduce {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Fock cutoff or subsystem dimensions that do not describe a valid layout.
class LayoutError : public Error {
 public:
  using Error::Error;
};

// A physical parameter or state outside its admissible range.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Inconsistent model configuration (e.g. zero detuning for the dispersive protocol).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Unequal couplings admit no real resonant transfer time.
class NoTransferTimeError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

// Both couplings zero: the resonant coefficients are undefined.
class DegenerateModelError : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

class IntegrationError : public Error {
 public:
  IntegrationError(const std::string& what, double last_good_time)
      : Error(what + " (last good t = " + std::to_string(last_good_time) + " us)"),
        last_good_time_(last_good_time) {}

  double last_good_time() const { return last_good_time_; }

 private:
  double last_good_time_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace transduce
