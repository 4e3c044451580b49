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

// Executes one configured command and writes its result files into
// config.out_dir: a CSV table, summary.json and config.echo.

#include <filesystem>
#include <string>
#include <vector>

#include "transduce/config.hpp"

namespace transduce {

struct RunOutcome {
  bool passed = true;  // false only when validation reports a failing property
  std::string headline;
  std::vector<std::filesystem::path> files;
  std::vector<std::string> warnings;
};

std::string_view code_version();

RunOutcome execute(const RunConfig& config);

}  // namespace transduce
