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

// Result files. Numbers are written with 12 significant digits, '.' as the
// decimal separator and '\n' line endings; rows follow grid index order.

#include <filesystem>
#include <string>
#include <vector>

#include "transduce/experiments.hpp"
#include "transduce/validation.hpp"

namespace transduce {

std::string format_number(double value);

const std::vector<std::string>& dynamics_columns();
const std::vector<std::string>& sweep_columns(SweepShape shape);
const std::vector<std::string>& validation_columns();

std::string dynamics_csv(const TrajectoryRecord& record);
std::string sweep_csv(const SweepResult& result);
std::string validation_csv(const ValidationReport& report);

// Writes (creating parent directories). Throws IoError on failure.
void write_text_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace transduce
