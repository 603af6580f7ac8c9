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

#include <optional>
#include <string>
#include <string_view>

namespace artk {

enum class FusionPoint { kEarly, kIntermediate, kLate, kVeryLate, kNone };
enum class FusionMechanism {
  kPriming,
  kKeyAwarePriming,
  kConvex,
  kDynamicGate,
  kMasking,
  kAttentionSum,
  kNone,
};
enum class KbSource { kExternal, kTrainTime, kDynamic, kMultiple };

std::string_view to_string(FusionPoint point);
std::string_view to_string(FusionMechanism mechanism);
std::string_view to_string(KbSource source);

std::optional<FusionPoint> parse_fusion_point(std::string_view text);
std::optional<FusionMechanism> parse_fusion_mechanism(std::string_view text);
std::optional<KbSource> parse_kb_source(std::string_view text);

/// Typology record attached to every assembled pipeline.
///
/// The enum fields are the machine-readable classification. The display
/// fields hold the wording of the categorization table the pipeline
/// reproduces ("Very late", "Static convex combination", "Train-time", ...).
/// Intermediate fusion is a declared label only; nothing infers it.
struct PipelineDescriptor {
  std::string name;    // registry name, e.g. "knn-lm"
  std::string system;  // system the pipeline reproduces, e.g. "k-NN LM"

  FusionPoint fusion_point = FusionPoint::kNone;
  FusionMechanism fusion_mechanism = FusionMechanism::kNone;
  KbSource kb_source = KbSource::kExternal;

  std::string fusion;         // table wording of the fusion point
  std::string fusion_detail;  // table wording of the mechanism, may be empty
  std::string kb;             // table wording of the KB source
  std::string key_type;
  std::string value_type;
  std::string aggregation;

  friend bool operator==(const PipelineDescriptor&, const PipelineDescriptor&) = default;
};

/// Stable "field: value" lines, one per field, fixed order.
std::string to_record(const PipelineDescriptor& descriptor);

/// Inverse of to_record. Throws Error(kFormat) on unknown or missing fields.
PipelineDescriptor parse_record(std::string_view record);

}  // namespace artk
