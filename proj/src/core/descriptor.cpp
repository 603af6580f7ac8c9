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

#include "artk/core/descriptor.hpp"

#include <array>
#include <map>
#include <sstream>
#include <utility>

#include "artk/core/error.hpp"

namespace artk {
namespace {

constexpr std::array<std::pair<FusionPoint, std::string_view>, 5> kFusionPoints{{
    {FusionPoint::kEarly, "early"},
    {FusionPoint::kIntermediate, "intermediate"},
    {FusionPoint::kLate, "late"},
    {FusionPoint::kVeryLate, "very-late"},
    {FusionPoint::kNone, "none"},
}};

constexpr std::array<std::pair<FusionMechanism, std::string_view>, 7> kMechanisms{{
    {FusionMechanism::kPriming, "priming"},
    {FusionMechanism::kKeyAwarePriming, "key-aware-priming"},
    {FusionMechanism::kConvex, "convex"},
    {FusionMechanism::kDynamicGate, "dynamic-gate"},
    {FusionMechanism::kMasking, "masking"},
    {FusionMechanism::kAttentionSum, "attention-sum"},
    {FusionMechanism::kNone, "none"},
}};

constexpr std::array<std::pair<KbSource, std::string_view>, 4> kKbSources{{
    {KbSource::kExternal, "external"},
    {KbSource::kTrainTime, "train-time"},
    {KbSource::kDynamic, "dynamic"},
    {KbSource::kMultiple, "multiple"},
}};

template <typename E, std::size_t N>
std::string_view name_of(const std::array<std::pair<E, std::string_view>, N>& table, E value) {
  for (const auto& [e, name] : table) {
    if (e == value) return name;
  }
  return "unknown";
}

template <typename E, std::size_t N>
std::optional<E> parse_of(const std::array<std::pair<E, std::string_view>, N>& table,
                          std::string_view text) {
  for (const auto& [e, name] : table) {
    if (name == text) return e;
  }
  return std::nullopt;
}

constexpr std::array<std::string_view, 11> kFieldOrder{
    "name",          "system", "fusion_point", "fusion_mechanism", "kb_source",  "fusion",
    "fusion_detail", "kb",     "keys",         "values",           "aggregation"};

}  // namespace

std::string_view to_string(FusionPoint point) { return name_of(kFusionPoints, point); }
std::string_view to_string(FusionMechanism mechanism) { return name_of(kMechanisms, mechanism); }
std::string_view to_string(KbSource source) { return name_of(kKbSources, source); }

std::optional<FusionPoint> parse_fusion_point(std::string_view text) {
  return parse_of(kFusionPoints, text);
}
std::optional<FusionMechanism> parse_fusion_mechanism(std::string_view text) {
  return parse_of(kMechanisms, text);
}
std::optional<KbSource> parse_kb_source(std::string_view text) {
  return parse_of(kKbSources, text);
}

std::string to_record(const PipelineDescriptor& d) {
  std::ostringstream out;
  out << "name: " << d.name << '\n'
      << "system: " << d.system << '\n'
      << "fusion_point: " << to_string(d.fusion_point) << '\n'
      << "fusion_mechanism: " << to_string(d.fusion_mechanism) << '\n'
      << "kb_source: " << to_string(d.kb_source) << '\n'
      << "fusion: " << d.fusion << '\n'
      << "fusion_detail: " << d.fusion_detail << '\n'
      << "kb: " << d.kb << '\n'
      << "keys: " << d.key_type << '\n'
      << "values: " << d.value_type << '\n'
      << "aggregation: " << d.aggregation << '\n';
  return out.str();
}

PipelineDescriptor parse_record(std::string_view record) {
  std::map<std::string, std::string> fields;
  std::istringstream in{std::string(record)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto colon = line.find(':');
    require(colon != std::string::npos, ErrorCode::kFormat, "descriptor line without ':': " + line);
    std::string value = line.substr(colon + 1);
    if (!value.empty() && value.front() == ' ') value.erase(0, 1);
    fields[line.substr(0, colon)] = value;
  }
  auto take = [&](const std::string& field) {
    const auto it = fields.find(field);
    require(it != fields.end(), ErrorCode::kFormat, "descriptor field missing: " + field);
    return it->second;
  };
  for (const auto& [field, _] : fields) {
    bool known = false;
    for (const auto name : kFieldOrder) known = known || name == field;
    require(known, ErrorCode::kFormat, "unknown descriptor field: " + field);
  }

  PipelineDescriptor d;
  d.name = take("name");
  d.system = take("system");
  const auto point = parse_fusion_point(take("fusion_point"));
  const auto mechanism = parse_fusion_mechanism(take("fusion_mechanism"));
  const auto source = parse_kb_source(take("kb_source"));
  require(point && mechanism && source, ErrorCode::kFormat, "descriptor enum out of range");
  d.fusion_point = *point;
  d.fusion_mechanism = *mechanism;
  d.kb_source = *source;
  d.fusion = take("fusion");
  d.fusion_detail = take("fusion_detail");
  d.kb = take("kb");
  d.key_type = take("keys");
  d.value_type = take("values");
  d.aggregation = take("aggregation");
  return d;
}

}  // namespace artk
