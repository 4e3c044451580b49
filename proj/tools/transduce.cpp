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

// transduce: run one simulation scenario and write its result files.
//
//   transduce <command> --config <path> [--set key=value ...] --out <dir> [--workers N]

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "transduce/errors.hpp"
#include "transduce/run.hpp"

namespace {

enum ExitCode {
  kOk = 0,
  kUnexpected = 1,
  kConfigError = 2,
  kIntegrationError = 3,
  kValidationFailed = 4,
  kIoError = 5,
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Qubit-to-atom transduction simulator"};
  app.set_version_flag("--version", std::string(transduce::code_version()));
  app.footer(
      "Exit codes: 0 ok, 1 unexpected error, 2 configuration error, 3 integration error,\n"
      "            4 validation failure, 5 I/O error.");

  std::string command;
  std::string config_path;
  std::vector<std::string> overrides;
  std::string out_dir;
  int workers = 1;

  app.add_option("command", command, "dynamics | bloch-sweep | noise-heatmap | thermal-sweep | validate")
      ->required();
  app.add_option("--config", config_path, "flat key=value configuration file")->required();
  app.add_option("--set", overrides, "override one config entry, key=value (repeatable)");
  app.add_option("--out", out_dir, "output directory")->required();
  app.add_option("--workers", workers, "parallel workers for sweeps")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    transduce::RunConfig config =
        transduce::parse_config(transduce::parse_command(command), config_path, overrides);
    config.solver.workers = workers;
    config.out_dir = out_dir;

    const auto start = std::chrono::steady_clock::now();
    const transduce::RunOutcome outcome = transduce::execute(config);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    for (const std::string& w : outcome.warnings) std::cerr << "warning: " << w << "\n";
    std::cout << command << ": " << outcome.headline << "\n";
    for (const auto& f : outcome.files) std::cout << "  wrote " << f.string() << "\n";
    std::printf("  elapsed %.2f s\n", seconds);
    return outcome.passed ? kOk : kValidationFailed;
  } catch (const transduce::IntegrationError& e) {
    std::cerr << "integration error: " << e.what() << " (last good time " << e.last_good_time() << " us)\n";
    return kIntegrationError;
  } catch (const transduce::IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kIoError;
  } catch (const transduce::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kConfigError;
  } catch (const transduce::ParameterError& e) {
    std::cerr << "parameter error: " << e.what() << "\n";
    return kConfigError;
  } catch (const transduce::LayoutError& e) {
    std::cerr << "layout error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUnexpected;
  }
}
