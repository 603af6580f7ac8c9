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

#include "artk/eval/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "artk/core/error.hpp"
#include "artk/pipelines/wizards.hpp"

namespace artk {
namespace {

using Json = nlohmann::json;

template <typename T>
void read_field(const Json& j, const char* key, T& field) {
  if (const auto it = j.find(key); it != j.end()) field = it->template get<T>();
}

}  // namespace

RunConfig parse_config(std::string_view json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    fail(ErrorCode::kFormat, std::string("config is not valid JSON: ") + e.what());
  }
  require(j.is_object(), ErrorCode::kFormat, "config must be a JSON object");

  RunConfig config;
  const auto known = to_json(config);
  for (const auto& [key, value] : j.items()) {
    require(known.contains(key), ErrorCode::kFormat, "unknown config key '" + key + "'");
  }
  try {
    read_field(j, "pipeline", config.pipeline);
    if (j.contains("seed") && !j["seed"].is_null()) {
      require(j["seed"].is_number_unsigned(), ErrorCode::kFormat,
              "config key 'seed' must be a non-negative integer");
      config.seed = j["seed"].get<std::uint64_t>();
    }
    read_field(j, "lambda", config.lambda);
    read_field(j, "theta", config.theta);
    read_field(j, "temperature", config.temperature);
    read_field(j, "top_k", config.top_k);
    read_field(j, "n", config.n);
    read_field(j, "lambda_rr", config.lambda_rr);
    read_field(j, "dim", config.dim);
    read_field(j, "order", config.order);
    read_field(j, "add_k", config.add_k);
    read_field(j, "decay", config.decay);
    read_field(j, "cache_capacity", config.cache_capacity);
    read_field(j, "iterations", config.iterations);
    read_field(j, "fanout", config.fanout);
    read_field(j, "train", config.train);
    read_field(j, "corpus", config.corpus);
    read_field(j, "dev", config.dev);
    read_field(j, "docs", config.docs);
    read_field(j, "kg", config.kg);
    read_field(j, "out", config.out);
  } catch (const Json::exception& e) {
    fail(ErrorCode::kFormat, std::string("config value has the wrong type: ") + e.what());
  }
  return config;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  require(in.good(), ErrorCode::kIo, "cannot open config " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

nlohmann::ordered_json to_json(const RunConfig& config) {
  nlohmann::ordered_json j;
  j["pipeline"] = config.pipeline;
  j["seed"] = config.seed ? nlohmann::ordered_json(*config.seed) : nlohmann::ordered_json();
  j["lambda"] = config.lambda;
  j["theta"] = config.theta;
  j["temperature"] = config.temperature;
  j["top_k"] = config.top_k;
  j["n"] = config.n;
  j["lambda_rr"] = config.lambda_rr;
  j["dim"] = config.dim;
  j["order"] = config.order;
  j["add_k"] = config.add_k;
  j["decay"] = config.decay;
  j["cache_capacity"] = config.cache_capacity;
  j["iterations"] = config.iterations;
  j["fanout"] = config.fanout;
  j["train"] = config.train;
  j["corpus"] = config.corpus;
  j["dev"] = config.dev;
  j["docs"] = config.docs;
  j["kg"] = config.kg;
  j["out"] = config.out;
  return j;
}

std::filesystem::path resolve_data_path(const std::string& path) {
  std::filesystem::path p(path);
  if (p.empty() || p.is_absolute()) return p;
  if (const char* root = std::getenv("ARTK_DATA_DIR"); root != nullptr && *root != '\0') {
    return std::filesystem::path(root) / p;
  }
  return p;
}

std::filesystem::path require_path(const std::string& path, std::string_view what) {
  require(!path.empty(), ErrorCode::kInvalidArgument, "missing " + std::string(what) + " path");
  const auto resolved = resolve_data_path(path);
  require(std::filesystem::is_regular_file(resolved), ErrorCode::kIo,
          std::string(what) + " file not found: " + resolved.string());
  return resolved;
}

std::uint64_t require_seed(const RunConfig& config) {
  require(config.seed.has_value(), ErrorCode::kInvalidArgument, "a seed is required (--seed)");
  return *config.seed;
}

std::size_t effective_top_k(const RunConfig& config) {
  if (config.top_k > 0) return config.top_k;
  if (config.pipeline == "knn-lm") return kDefaultKnnNeighbors;
  if (config.pipeline == "gated-lm") return kDefaultGateNeighbors;
  if (config.pipeline == "wizards") return kDefaultKnowledgePool;
  return 1;
}

std::size_t effective_dim(const RunConfig& config) {
  if (config.dim > 0) return config.dim;
  if (config.pipeline == "gated-lm") return 512;
  if (config.pipeline == "knn-lm" || config.pipeline == "cache-lm" || config.pipeline == "base") {
    return 1024;
  }
  return 256;
}

}  // namespace artk
