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

#include <string>
#include <string_view>
#include <vector>

#include "artk/core/descriptor.hpp"

namespace artk {

/// Registry names of every shipped pipeline, in a fixed order.
const std::vector<std::string>& pipeline_names();

/// Static descriptor of a shipped pipeline. Throws Error(kNotFound).
PipelineDescriptor descriptor_for(std::string_view name);

}  // namespace artk
