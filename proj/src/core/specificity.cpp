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

#include "artk/core/specificity.hpp"

namespace artk {

Query select_relation(const Query& query) {
  require(query.structured.has_value(), ErrorCode::kInvalidArgument,
          "relation selector needs a structured query");
  Query projected;
  projected.task = query.task;
  projected.text = {query.structured->relation};
  return projected;
}

Key encode_with_specificity(const Query& query, const Specificity& specificity,
                            const Encoder& base_encoder) {
  switch (specificity.mode) {
    case SpecificityMode::kSample:
      return base_encoder.encode(query);
    case SpecificityMode::kTask: {
      Query task_query;
      task_query.task = query.task;
      task_query.text = {"<task:" + std::string(to_string(query.task)) + ">"};
      return base_encoder.encode(task_query);
    }
    case SpecificityMode::kClass:
      require(static_cast<bool>(specificity.class_selector), ErrorCode::kInvalidArgument,
              "class specificity requires a class selector");
      return base_encoder.encode(specificity.class_selector(query));
  }
  fail(ErrorCode::kInvalidArgument, "unknown specificity mode");
}

}  // namespace artk
