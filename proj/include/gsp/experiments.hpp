// Copyright 2026 The gsp Authors.
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

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace gsp {

enum class ExperimentId { Fig4Top, Fig4Bottom, CommunitySelection, MCDemo, DftFoldingSanity };

std::string to_string(ExperimentId id);
/// Accepts the enumerator name in any letter case.
ExperimentId parse_experiment_id(const std::string& name);
std::vector<ExperimentId> all_experiments();

/// Override values are kept as text and parsed by the experiment that reads them.
struct ExperimentConfig {
  ExperimentId id = ExperimentId::Fig4Top;
  std::uint64_t seed = 1;
  std::map<std::string, std::string> overrides;

  /// Throws InvalidSpec for keys the experiment does not read.
  void validate() const;
};

/// Override keys and their defaults.
std::map<std::string, std::string> default_overrides(ExperimentId id);

/// {"experiment": name, "seed": S, "overrides": {key: value}}; scalar override
/// values may be numbers or strings.
ExperimentConfig config_from_json(const nlohmann::json& j);

struct ExperimentResult {
  nlohmann::json report;
  bool passed = false;
  /// file name -> CSV content
  std::map<std::string, std::string> csv_files;
};

ExperimentResult run_experiment(const ExperimentConfig& cfg);

/// Writes report.json and the CSV files under dir/<experiment id>.
std::filesystem::path write_result(const ExperimentResult& result, const std::filesystem::path& dir);

}  // namespace gsp
