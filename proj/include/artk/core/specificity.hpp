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

#include <functional>

#include "artk/core/pipeline.hpp"

namespace artk {

enum class SpecificityMode { kSample, kTask, kClass };

/// Projection of a query onto the part a class-specific encoder may see.
using ClassSelector = std::function<Query(const Query&)>;

struct Specificity {
  SpecificityMode mode = SpecificityMode::kSample;
  ClassSelector class_selector;  // required in class mode
};

/// Keeps only the relation of a structured (subject, relation) query, as text.
Query select_relation(const Query& query);

/// sample: encode q; task: encode a fixed per-task query (q ignored);
/// class: encode class_selector(q).
Key encode_with_specificity(const Query& query, const Specificity& specificity,
                            const Encoder& base_encoder);

}  // namespace artk
