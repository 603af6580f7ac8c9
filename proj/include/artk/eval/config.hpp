// Copyright 2026 The artk Authors
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
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "artk/pipelines/lm.hpp"

namespace artk {

/// Experiment configuration shared by the CLI commands.
///
/// Config files are JSON objects whose keys are the field names below; every
/// key is optional and unknown keys are rejected. Zero for top_k or dim
/// selects the pipeline default. Relative paths are resolved against
/// $ARTK_DATA_DIR when it is set.
struct RunConfig {
  std::string pipeline;
  std::optional<std::uint64_t> seed;

  double lambda = kDefaultLambda;
  double theta = kDefaultTheta;
  double temperature = kDefaultKnnTemperature;
  std::size_t top_k = 0;
  std::size_t n = 20;
  double lambda_rr = 1.0;
  std::size_t dim = 0;
  int order = 3;
  double add_k = 0.1;
  double decay = 0.7;
  std::size_t cache_capacity = kDefaultCacheCapacity;
  std::size_t iterations = 2;
  std::size_t fanout = 3;

  std::string train;
  std::string corpus;
  std::string dev;
  std::string docs;
  std::string kg;
  std::string out;
};

/// Throws Error(kFormat) on malformed JSON, unknown keys or mistyped values.
RunConfig parse_config(std::string_view json_text);
RunConfig load_config(const std::filesystem::path& path);

/// Every field, in declaration order; unset seed is null.
nlohmann::ordered_json to_json(const RunConfig& config);

/// Prefixes relative paths with $ARTK_DATA_DIR when set.
std::filesystem::path resolve_data_path(const std::string& path);

/// Resolves and checks that the file exists; `what` names the field in the
/// diagnostic. Throws Error(kInvalidArgument) when unset, Error(kIo) when
/// missing.
std::filesystem::path require_path(const std::string& path, std::string_view what);

/// Throws Error(kInvalidArgument) without a seed.
std::uint64_t require_seed(const RunConfig& config);

/// Neighbour count: the configured top_k, else 1024 for knn-lm, 4 for
/// gated-lm, 7 for wizards and 1 otherwise.
std::size_t effective_top_k(const RunConfig& config);

/// Key dimension: the configured dim, else 1024 for knn-lm and cache-lm,
/// 512 for gated-lm and 256 for the dense QA encoders.
std::size_t effective_dim(const RunConfig& config);

}  // namespace artk
